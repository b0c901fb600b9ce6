# %% [markdown]
# # Structure documents and the command line
#
# Structures are saved as JSON documents: named modules, named matrices and
# typed bundles referencing them.  Integers are decimal strings and keys are
# sorted, so saving is byte-stable.

# %%
import tempfile
from pathlib import Path

from corings import emit_example, example_names, load, save
from corings.cli import main

print(len(example_names()), "built-in examples, e.g.", example_names()[:4])

doc = emit_example("hopf-modules-c2-z4")
print(doc.kinds)

tmp = Path(tempfile.mkdtemp())
path = tmp / "hopf.json"
save(doc, path)
print("round trip byte-identical:", load(path).to_json() == path.read_text())

# %% [markdown]
# The same operations from the command line (exit code 0, 1 or 2).

# %%
for argv in (["verify", str(path)],
             ["alpha", "pairings/eps-only-c2-z4"],
             ["rat", "--pairing", "pairings/product-c2-z4", "--module", "regular"],
             ["build", "koppinen", "doi-hc-c2-z4", "-o", str(tmp / "k.json")]):
    print("$ corings", " ".join(argv))
    code = main(argv)
    print("exit", code, "\n")
