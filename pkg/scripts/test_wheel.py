# Copyright (c) Meta Platforms, Inc. and affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Install the built wheel into a fresh uv environment and smoke-test the CLI."""

import os
import subprocess
import sys
import tempfile
from pathlib import Path


def main():
    dist_dir = Path("dist")
    wheels = sorted(dist_dir.glob("pypolyzeta-*.whl")) if dist_dir.is_dir() else []
    if not wheels:
        print("✗ No pypolyzeta wheel in dist/", file=sys.stderr)
        sys.exit(1)

    wheel_file = wheels[-1]
    print(f"Testing wheel: {wheel_file.name}")

    with tempfile.TemporaryDirectory() as tmpdir:
        env = os.environ.copy()
        env["UV_PROJECT_ENVIRONMENT"] = str(Path(tmpdir) / ".venv")
        env["PYPOLYZETA_CACHE_DIR"] = str(Path(tmpdir) / "cache")

        subprocess.run(
            ["uv", "venv", "--python", sys.executable], cwd=tmpdir, env=env, check=True
        )
        # Dependencies come from the wheel metadata this time.
        subprocess.run(
            ["uv", "pip", "install", str(wheel_file.absolute())],
            cwd=tmpdir,
            env=env,
            check=True,
        )

        checks = [
            (["pypolyzeta", "reduce", "--word", "2,1"], "zeta(3)\n"),
            (["pypolyzeta", "gamma", "--word", "1,1"], "1/2*gamma^2 - 1/2*zeta(2)\n"),
        ]
        for argv, expected in checks:
            result = subprocess.run(
                ["uv", "run", "--no-project"] + argv,
                cwd=tmpdir,
                env=env,
                capture_output=True,
                text=True,
            )
            if result.returncode != 0 or result.stdout != expected:
                print(f"✗ {' '.join(argv)}: {result.stdout!r} {result.stderr}", file=sys.stderr)
                sys.exit(1)
            print(f"✓ {' '.join(argv)}")

        result = subprocess.run(
            ["uv", "run", "--no-project", "python", "-m", "unittest", "pypolyzeta.test.test_words"],
            cwd=tmpdir,
            env=env,
        )
        sys.exit(result.returncode)


if __name__ == "__main__":
    main()
