#!/usr/bin/env python3
"""Regenerate the bundled link corpus from spherogram's link tables.

Writes, for every corpus entry, a native crossing-list file under
crates/core/corpus/links/ and (where one exists) the oriented PD code under
crates/core/corpus/pd/.  The native files are the test truth; the PD files are
only used to cross-check the PD importer.

    python3 -m venv venv && venv/bin/pip install spherogram==2.4.1
    venv/bin/python tools/gen_corpus.py

Output is deterministic (fixed seeds for the Reidemeister-move variants).
"""

import os
import random
import sys

import spherogram

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "crates", "core", "corpus")

KNOTS = ["3_1", "4_1", "5_1", "5_2"]
LINKS = (
    ["L2a1", "L4a1", "L5a1"]
    + ["L6a%d" % i for i in range(1, 6)]
    + ["L6n1"]
    + ["L7a%d" % i for i in range(1, 8)]
    + ["L7n1", "L7n2"]
)
# (base, suffix, steps, p1, p2, seed): diagrams of the same oriented link
# obtained by random crossing-increasing Reidemeister moves.
VARIANTS = [
    ("3_1", "r1", 3, 1.0, 0.0, 11),
    ("3_1", "r2", 2, 0.0, 1.0, 12),
    ("3_1", "mix", 8, 0.3, 0.3, 13),
    ("4_1", "mix", 6, 0.3, 0.3, 21),
    ("L2a1", "r2", 2, 0.0, 1.0, 31),
    ("L2a1", "mix", 6, 0.3, 0.3, 32),
    ("L4a1", "mix", 6, 0.3, 0.3, 41),
    ("L6a4", "mix", 5, 0.3, 0.3, 61),
    ("L7n1", "mix", 5, 0.3, 0.3, 71),
]


def oriented_pd(link):
    """PD tuples (1-based) with labels consecutive along each component.

    Tuple order is (under in, over, under out, over) counterclockwise; also
    returns the crossing signs and the list of component label ranges.
    """
    pd = {c: [None] * 4 for c in link.crossings}
    label = 1
    ranges = []
    for comp in link.link_components:
        lo = label
        for cep in comp:
            op = cep.opposite()
            pd[cep.crossing][cep.strand_index] = label
            pd[op.crossing][op.strand_index] = label
            label += 1
        ranges.append((lo, label - 1))
    tuples = [tuple(pd[c]) for c in link.crossings]
    signs = [c.sign for c in link.crossings]
    return tuples, signs, ranges


def to_native(tuples, signs, ranges):
    """Convert oriented PD data to (arc_count, crossings, components).

    Arcs are classes of edges glued through over-crossings.  Components are
    walked in label order starting at the smallest edge that leaves an
    under-crossing; arcs are numbered on first visit.
    """
    parent = {}

    def find(e):
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for (a, b, c, d) in tuples:
        find(a), find(c)
        parent[find(b)] = find(d)
    starts = {t[2] for t in tuples}
    arc_of = {}
    components = []
    nxt = 1
    for lo, hi in ranges:
        edges = list(range(lo, hi + 1))
        begin = [e for e in edges if e in starts]
        if begin:
            s = min(begin)
            k = edges.index(s)
            edges = edges[k:] + edges[:k]
        comp = []
        for e in edges:
            r = find(e)
            if r not in arc_of:
                arc_of[r] = nxt
                comp.append(nxt)
                nxt += 1
        components.append(comp)
    crossings = []
    for (a, b, c, d), s in zip(tuples, signs):
        crossings.append((s, arc_of[find(b)], arc_of[find(a)], arc_of[find(c)]))
    return nxt - 1, crossings, components


def reverse_component(arcs, crossings, components, which):
    """Reverse the orientation of one component in native data."""
    rev = set(components[which])
    out = []
    for s, over, uin, uout in crossings:
        if uin in rev:
            uin, uout, s = uout, uin, -s
        if over in rev:
            s = -s
        out.append((s, over, uin, uout))
    comps = [list(c) for c in components]
    c = comps[which]
    comps[which] = [c[0]] + c[1:][::-1]
    return arcs, out, comps


def native_text(name, arcs, crossings, components, note):
    lines = ["# %s" % note, "name %s" % name, "arcs %d" % arcs]
    for s, o, i, u in crossings:
        lines.append("%+d %d %d %d" % (s, o, i, u))
    for comp in components:
        lines.append("component " + " ".join(str(a) for a in comp))
    return "\n".join(lines) + "\n"


def pd_text(name, tuples):
    body = " ".join("X[%d,%d,%d,%d]" % t for t in tuples)
    return "# %s\n%s\n" % (name, body)


def check_consecutive(tuples, ranges):
    comp = {}
    for k, (lo, hi) in enumerate(ranges):
        for e in range(lo, hi + 1):
            comp[e] = (lo, hi)
    for (a, b, c, d) in tuples:
        lo, hi = comp[a]
        assert c == (a + 1 if a < hi else lo), (a, c)


def emit(name, link, note):
    tuples, signs, ranges = oriented_pd(link)
    check_consecutive(tuples, ranges)
    arcs, crossings, comps = to_native(tuples, signs, ranges)
    write(os.path.join(ROOT, "links", name + ".txt"), native_text(name, arcs, crossings, comps, note))
    write(os.path.join(ROOT, "pd", name + ".pd"), pd_text(name, tuples))
    return arcs, crossings, comps


def write(path, text):
    with open(path, "w") as f:
        f.write(text)


def main():
    names = []
    for name in KNOTS + LINKS:
        emit(name, spherogram.Link(name), "%s, spherogram %s table diagram" % (name, spherogram.__version__))
        names.append(name)

    # Second component of L4a1 reversed (the {1} orientation).
    L = spherogram.Link("L4a1")
    tuples, signs, ranges = oriented_pd(L)
    arcs, crossings, comps = to_native(tuples, signs, ranges)
    arcs, crossings, comps = reverse_component(arcs, crossings, comps, 1)
    write(
        os.path.join(ROOT, "links", "L4a1{1}.txt"),
        native_text("L4a1{1}", arcs, crossings, comps, "L4a1 with its second component reversed"),
    )
    names.append("L4a1{1}")

    for base, suffix, steps, p1, p2, seed in VARIANTS:
        random.seed(seed)
        L = spherogram.Link(base)
        L.backtrack(steps=steps, prob_type_1=p1, prob_type_2=p2)
        name = "%s.%s" % (base, suffix)
        emit(name, L, "%s after %d random Reidemeister moves (seed %d)" % (base, steps, seed))
        names.append(name)

    write(os.path.join(ROOT, "INDEX"), "\n".join(names) + "\n")
    print("wrote %d diagrams" % len(names), file=sys.stderr)


if __name__ == "__main__":
    main()
