"""Replay the ```console blocks of README.md and compare their output byte for byte.

Usage: readme_cli.py README BINARY_DIR SOURCE_DIR

Commands run through bash, in order, in one scratch directory holding copies of data/ and
corpus/, with BINARY_DIR first on PATH. stdout and stderr are compared together.
"""

import os
import pathlib
import re
import shutil
import subprocess
import sys
import tempfile


def sessions(text):
    for block in re.findall(r"```console\n(.*?)```", text, flags=re.S):
        command, expected = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if command is not None:
                    yield command, expected
                command, expected = line[2:], []
            else:
                expected.append(line)
        if command is not None:
            yield command, expected


def main():
    readme, bindir, srcdir = (pathlib.Path(a) for a in sys.argv[1:4])
    env = dict(os.environ, PATH=f"{bindir.resolve()}{os.pathsep}{os.environ['PATH']}")
    failures = 0
    count = 0
    with tempfile.TemporaryDirectory() as tmp:
        for sub in ("data", "corpus"):
            shutil.copytree(srcdir / sub, pathlib.Path(tmp) / sub)
        for command, expected in sessions(readme.read_text()):
            count += 1
            run = subprocess.run(["bash", "-c", command], cwd=tmp, env=env, capture_output=True, text=True)
            got = (run.stdout + run.stderr).splitlines()
            if got != expected:
                failures += 1
                print(f"MISMATCH: $ {command}\n--- expected\n" + "\n".join(expected) + "\n--- got\n" + "\n".join(got))
    print(f"{count} commands, {failures} mismatches")
    return 1 if failures or count == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
