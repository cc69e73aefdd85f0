#!/usr/bin/env python3
"""Hunting for counterexamples to the converse of the comparison theorem.

The theorem: augmentable + every cell closure acyclic  =>  the two
homologies agree.  The converse asks whether agreement forces the local
condition.  This script generates basis-changed simplicial complexes
(homology is preserved exactly, the face order is not) and reports every
augmentable complex whose global homologies agree while some cell closure
fails to be acyclic.

Every hit is re-verified from its own serialization before being shown.

    python demos/converse_hunt.py [budget]
"""

import sys

from lefhom import GeneratorConfig, ZZ, export_dot, parse_lef, search_converse

budget = int(sys.argv[1]) if len(sys.argv) > 1 else 400
config = GeneratorConfig(seed=2024, mode="basis-change",
                         max_cells_per_dim=3, transform_steps=4)

print(f"searching {budget} basis-changed complexes (seed {config.seed})...")
hits = list(search_converse(config, ZZ, budget=budget))
print(f"candidates found: {len(hits)}")

if not hits:
    print("no counterexample found at this scale")
    sys.exit(0)

first = hits[0]
print()
print(f"first candidate (index {first.index}, per-candidate seed {first.seed}):")
print(f"  local condition fails at: {', '.join(first.failing_cells)}")
print(f"  chain homology:   {first.lefschetz_profile}")
print(f"  space homology:   {first.singular_profile}")
print(f"  re-verified from serialization: {first.reverified}")
print()
print("serialized complex:")
for line in first.lef_text.rstrip().splitlines():
    print("  " + line)
print()
print("its Hasse diagram (DOT):")
print(export_dot(parse_lef(first.lef_text)))
print("note: a candidate refutes only the literal converse on this instance;")
print("nothing here proves or refutes the general statement.")
