#!/usr/bin/env python3
"""Regenerates fixtures/: plane-drawn small graphs and torus embeddings."""

import math
import pathlib

import networkx as nx

ROOT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def write_edges(path, g):
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    with open(path, "w") as f:
        f.write(f"{g.number_of_nodes()} {len(edges)}\n")
        for u, v in edges:
            f.write(f"{u} {v}\n")


def write_tor(path, n, pos, edges):
    """edges: list of (u, v, sx, sy) with the shift running from u to v."""
    with open(path, "w") as f:
        f.write(f"{n} {len(edges)}\n")
        for v in range(n):
            x, y = pos[v]
            f.write(f"{v} {x:.6f} {y:.6f}\n")
        for u, v, sx, sy in edges:
            f.write(f"{u} {v} {sx} {sy}\n")


def squeeze(pos):
    """Affinely map a layout into [0.1, 0.9]^2 (one torus tile)."""
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    return {v: (0.1 + 0.8 * (p[0] - min(xs)) / span, 0.1 + 0.8 * (p[1] - min(ys)) / span) for v, p in pos.items()}


def circle(n, r=0.4, phase=0.0):
    return [(0.5 + r * math.cos(phase + 2 * math.pi * i / n), 0.5 + r * math.sin(phase + 2 * math.pi * i / n))
            for i in range(n)]


def planar_fixtures():
    out = {}
    out["k2"] = (nx.path_graph(2), {0: (0.3, 0.5), 1: (0.7, 0.5)})
    out["k3"] = (nx.cycle_graph(3), dict(enumerate(circle(3))))
    out["p5"] = (nx.path_graph(5), {i: (0.1 + 0.2 * i, 0.5) for i in range(5)})
    star = nx.star_graph(4)
    out["star5"] = (star, {0: (0.5, 0.5), 1: (0.9, 0.5), 2: (0.5, 0.9), 3: (0.1, 0.5), 4: (0.5, 0.1)})
    tree = nx.balanced_tree(2, 2)
    out["tree7"] = (tree, {0: (0.5, 0.9), 1: (0.3, 0.6), 2: (0.7, 0.6), 3: (0.2, 0.3), 4: (0.4, 0.3),
                           5: (0.6, 0.3), 6: (0.8, 0.3)})
    for n in range(4, 9):
        out[f"c{n}"] = (nx.cycle_graph(n), dict(enumerate(circle(n))))
    k4 = nx.complete_graph(4)
    out["k4"] = (k4, {0: (0.5, 0.45), **{i + 1: p for i, p in enumerate(circle(3, 0.4, math.pi / 2))}})
    wheel = nx.wheel_graph(6)
    out["w5"] = (wheel, {0: (0.5, 0.5), **{i + 1: p for i, p in enumerate(circle(5))}})
    octa = nx.octahedral_graph()
    out["octahedron"] = (octa, None)
    cube = nx.hypercube_graph(3)
    cube = nx.convert_node_labels_to_integers(cube, ordering="sorted")
    out["cube"] = (cube, None)
    prism = nx.circular_ladder_graph(3)
    out["prism"] = (prism, None)
    for rows, cols in ((3, 3), (3, 4)):
        g = nx.convert_node_labels_to_integers(nx.grid_2d_graph(rows, cols), ordering="sorted")
        pos = {i * cols + j: (0.1 + 0.8 * j / (cols - 1), 0.1 + 0.8 * i / (rows - 1))
               for i in range(rows) for j in range(cols)}
        out[f"grid{rows}x{cols}"] = (g, pos)
    out["icosahedron"] = (nx.icosahedral_graph(), None)
    out["dodecahedron"] = (nx.dodecahedral_graph(), None)
    for name, (g, pos) in list(out.items()):
        if pos is None:
            pos = squeeze(nx.planar_layout(g))
        out[name] = (g, pos)
    return out


def grid_torus(m):
    pos = {}
    edges = []
    for i in range(m):
        for j in range(m):
            v = i * m + j
            pos[v] = ((i + 0.5) / m, (j + 0.5) / m)
            edges.append((v, ((i + 1) % m) * m + j, 1 if i + 1 == m else 0, 0))
            edges.append((v, i * m + (j + 1) % m, 0, 1 if j + 1 == m else 0))
    return m * m, pos, edges


def petersen():
    # Centre vertex 0, nine vertices on a circle, three chords leaving the tile.
    pos = {0: (0.5, 0.5)}
    for a in range(9):
        t = math.radians(75 + 40 * a)
        pos[a + 1] = (0.5 + 0.375 * math.cos(t), 0.5 + 0.375 * math.sin(t))
    edges = [(a + 1, (a + 1) % 9 + 1, 0, 0) for a in range(9)]
    edges += [(0, 1, 0, 0), (0, 4, 0, 0), (0, 7, 0, 0)]
    edges += [(2, 6, 0, 1), (8, 3, 1, 0), (9, 5, 1, 1)]
    return 10, pos, edges


def main():
    (ROOT / "planar").mkdir(parents=True, exist_ok=True)
    (ROOT / "torus").mkdir(parents=True, exist_ok=True)
    for name, (g, pos) in planar_fixtures().items():
        write_edges(ROOT / "planar" / f"{name}.edges", g)
        write_tor(ROOT / "planar" / f"{name}.tor", g.number_of_nodes(), pos,
                  [(u, v, 0, 0) for u, v in sorted(tuple(sorted(e)) for e in g.edges())])

    n, pos, edges = petersen()
    g = nx.Graph()
    g.add_edges_from((u, v) for u, v, _, _ in edges)
    assert nx.is_isomorphic(g, nx.petersen_graph())
    write_tor(ROOT / "torus" / "petersen.tor", n, pos, edges)
    write_edges(ROOT / "torus" / "petersen.edges", g)

    for m in (4, 5):
        n, pos, edges = grid_torus(m)
        write_tor(ROOT / "torus" / f"c{m}xc{m}.tor", n, pos, edges)
        g = nx.Graph()
        g.add_edges_from((u, v) for u, v, _, _ in edges)
        write_edges(ROOT / "torus" / f"c{m}xc{m}.edges", g)

    ring = [(0.1, 0.5), (0.3, 0.5), (0.5, 0.5), (0.7, 0.5)]
    write_tor(ROOT / "torus" / "c4ring.tor", 4, dict(enumerate(ring)),
              [(0, 1, 0, 0), (1, 2, 0, 0), (2, 3, 0, 0), (0, 3, -1, 0)])


if __name__ == "__main__":
    main()
