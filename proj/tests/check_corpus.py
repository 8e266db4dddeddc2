"""Regenerate the derivation corpus into a temporary directory and compare it with corpus/."""

import filecmp
import pathlib
import subprocess
import sys
import tempfile

root = pathlib.Path(__file__).resolve().parents[1]
with tempfile.TemporaryDirectory() as tmp:
    subprocess.run([sys.executable, str(root / "scripts" / "gen_corpus.py"), tmp], check=True,
                   stdout=subprocess.DEVNULL)
    fresh = sorted(p.name for p in pathlib.Path(tmp).glob("*.json"))
    stored = sorted(p.name for p in (root / "corpus").glob("*.json"))
    if fresh != stored:
        sys.exit(f"corpus file sets differ: {sorted(set(fresh) ^ set(stored))}")
    stale = [n for n in fresh if not filecmp.cmp(pathlib.Path(tmp) / n, root / "corpus" / n, shallow=False)]
    if stale:
        sys.exit(f"stale corpus files: {stale}")
print(f"corpus up to date ({len(fresh)} derivations)")
