"""Running the property suites programmatically.

The same checks the `qdual verify` command runs, driven from Python.
Each suite emits grep-friendly CHECK lines; the exit code contract is
0 when no line says FAIL.
"""

from qdual import corpus_ring
from qdual.cli import SUITES, run_verify


def main():
    ring = corpus_ring("r6")
    print("Suites available:", ", ".join(SUITES))
    print()
    text, code = run_verify(ring, ["duality-swap", "two-of-three"],
                            bound=4, samples=5, seed=7)
    print(text, end="")
    print()
    print("exit code would be:", code)


if __name__ == "__main__":
    main()
