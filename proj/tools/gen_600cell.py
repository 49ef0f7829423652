#!/usr/bin/env python3
"""Write the boundary complex of the 600-cell {3,3,5} as a facet file.

Vertices are the 120 unit quaternions of the binary icosahedral group;
facets are the 4-cliques of the edge graph (edge length 1/phi).
"""
import itertools
import math
import sys

phi = (1 + math.sqrt(5)) / 2


def even_permutations(seq):
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        if inversions % 2 == 0:
            yield tuple(seq[p] for p in perm)


def vertices():
    pts = set()
    for i in range(4):
        for sign in (1, -1):
            v = [0.0] * 4
            v[i] = sign
            pts.add(tuple(v))
    for signs in itertools.product((0.5, -0.5), repeat=4):
        pts.add(signs)
    for s1, s2, s3 in itertools.product((1, -1), repeat=3):
        base = (s1 * phi / 2, s2 * 0.5, s3 / (2 * phi), 0.0)
        for p in even_permutations(base):
            pts.add(tuple(round(x, 12) + 0.0 for x in p))
    return sorted(pts)


def main():
    pts = vertices()
    assert len(pts) == 120, len(pts)
    edge = 1 / phi
    adj = [set() for _ in pts]
    for i, j in itertools.combinations(range(120), 2):
        if abs(math.dist(pts[i], pts[j]) - edge) < 1e-9:
            adj[i].add(j)
            adj[j].add(i)
    facets = []
    for i in range(120):
        for j, k, l in itertools.combinations(sorted(x for x in adj[i] if x > i), 3):
            if k in adj[j] and l in adj[j] and l in adj[k]:
                facets.append((i, j, k, l))
    assert len(facets) == 600, len(facets)
    out = sys.stdout if len(sys.argv) < 2 else open(sys.argv[1], "w")
    out.write("# boundary of the 600-cell {3,3,5}: 120 vertices, 600 tetrahedra\n")
    for f in facets:
        out.write(" ".join(map(str, f)) + "\n")


if __name__ == "__main__":
    main()
