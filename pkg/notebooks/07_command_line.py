# %% [markdown]
# # The command line pipeline
#
# `distsim run` executes every stage; the stage subcommands do the same work
# one step at a time and produce identical files.

# %%
import subprocess
import sys
import tempfile
from pathlib import Path

from distsim.data import toy_anchors_path, toy_corpus_path

out = Path(tempfile.mkdtemp()) / "toy"
cmd = [sys.executable, "-m", "distsim.cli", "run", str(toy_corpus_path()),
       "--anchors", str(toy_anchors_path()), "-o", str(out)]
print("exit status", subprocess.run(cmd).returncode)
print(sorted(p.name for p in out.iterdir()))

# %%
print((out / "similarity.tsv").read_text())
print((out / "mst.dot").read_text())
