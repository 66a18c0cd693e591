"""Build a QCoherentPy wheel, keeping only the .whl in dist/. """

# Python Dependencies
import os
import shutil
import subprocess
import sys


project_dir = os.path.split(os.path.abspath(__file__))[0]
package_name = "QCoherentPy"
scratch = ("build", f"{package_name}.egg-info", f"{package_name}/{package_name}.egg-info")


def _remove(paths):
    for p in paths:
        shutil.rmtree(os.path.join(project_dir, p), ignore_errors=True)


def main() -> int:
    _remove(("dist",) + scratch)

    result = subprocess.run([sys.executable, "setup.py", "sdist", "bdist_wheel"], cwd=project_dir)
    if result.returncode != 0:
        return result.returncode

    _remove(scratch)
    dist_path = os.path.join(project_dir, "dist")
    for f in os.listdir(dist_path):
        if os.path.splitext(f)[-1] != ".whl":
            os.remove(os.path.join(dist_path, f))
    return 0


if __name__ == "__main__":
    sys.exit(main())
