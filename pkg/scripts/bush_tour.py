#!/usr/bin/env python3
"""A short tour of bushes: generate, query, and round-trip the depth encoding."""

from lndt.bushn import bushn_atoms, from_bushn, to_bushn
from lndt.codes import App, AtomSort, BaseT, BushC
from lndt.laws import GenConfig, gen_val
from lndt.spread import any as any_atom
from lndt.spread import flatten, map as map_atoms, size
from lndt.values import atom_at, parse_val, print_val

BUSH = BushC()
BUSH_INT = App(BUSH, BaseT(AtomSort.INT))


def main() -> None:
    v = parse_val("[1;[2;[10;[10]]]]")
    print("bush:           ", print_val(v))
    print("atoms:          ", flatten(BUSH, v))
    print("size:           ", size(BUSH, v))
    print("doubled:        ", print_val(map_atoms(BUSH, lambda n: 2 * n, v)))
    hit = any_atom(BUSH, lambda n: n == 10, v)
    print("first 10 at:    ", hit.text(), "->", atom_at(v, hit).payload)

    encoded = to_bushn(v, 1)
    print("depth-indexed:  ", encoded)
    print("atoms preserved:", bushn_atoms(encoded) == flatten(BUSH, v))
    print("round trips:    ", from_bushn(encoded) == v)

    g = gen_val(BUSH_INT, GenConfig(budget=25, seed=2024, atom_domain=tuple(range(5))))
    print("generated:      ", print_val(g))
    print("generated atoms:", flatten(BUSH, g))


if __name__ == "__main__":
    main()
