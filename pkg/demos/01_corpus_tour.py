"""Tour of the built-in ring corpus.

Walks through the six valid corpus rings, printing the structural
invariants that drive everything else: radical dimension, residue
degree, socle dimension, and whether the ring is Gorenstein (socle
simple, equivalently E needs one generator).
"""

from qdual import (corpus_ring, injective_hull, minimal_generator_count,
                   regular_module, socle)
from qdual.corpus import VALID_NAMES, corpus_source
from qdual.errors import NotLocal
from qdual.fileformat import parse_ring


def main():
    for name in VALID_NAMES:
        ring = corpus_ring(name)
        reg = regular_module(ring)
        e = injective_hull(ring)
        soc = socle(reg).shape[1]
        gens_e = minimal_generator_count(e)
        print("%s: p=%d dim=%d radical=%d residue-degree=%d socle=%d "
              "gens(E)=%d %s"
              % (name, ring.p, ring.dim, ring.radical.shape[1],
                 ring.residue_degree, soc, gens_e,
                 "Gorenstein" if soc == ring.residue_degree
                 else "non-Gorenstein"))

    print()
    print("r7 is included as a negative example:")
    try:
        parse_ring(corpus_source("r7"))
    except NotLocal as exc:
        print("  rejected:", exc)


if __name__ == "__main__":
    main()
