"""Smoke test for the hgpart_py extension module.

Build and install first:
    pip install --no-build-isolation ./crates/python
then run:
    python python/smoke_test.py
"""

import hgpart_py as hp


def cycle(n):
    vs = [f"v{i}" for i in range(n)]
    return hp.Hypergraph(vs, [[vs[i], vs[(i + 1) % n]] for i in range(n)])


def main():
    c5 = cycle(5)
    assert c5.order == 5 and c5.size == 5
    assert c5.col() == 3
    assert c5.separating_vertices() == []
    assert hp.chromatic_numbers(c5) == (3, 3)

    f = {v: [1, 1] for v in c5.vertices()}
    kind, cert = hp.solve(c5, f)
    assert kind == "hard", kind
    assert "type C t=1 n=5 coords 1 2" in cert, cert
    assert hp.is_hard(c5, f) is not None
    assert not hp.oracle_partitionable(c5, f)

    # one extra unit anywhere makes it partitionable
    g = dict(f)
    g["v0"] = [2, 1]
    kind, part = hp.solve(c5, g)
    assert kind == "partition"
    assert set(part.values()) <= {1, 2}
    assert hp.oracle_partitionable(c5, g)

    assert hp.is_strictly_degenerate(c5, {v: 3 for v in c5.vertices()})
    assert not hp.is_strictly_degenerate(c5, {v: 2 for v in c5.vertices()})

    h, hf = hp.random_hard(3, blocks=3, seed=7)
    assert hp.is_hard(h, hf) is not None
    text = h.to_text(hf)
    back, bf = hp.Hypergraph.parse(text)
    assert back.edges() == h.edges() and bf == hf

    coloring, hard = hp.list_color(c5, {v: ["a", "b", "c"] for v in c5.vertices()})
    assert hard is None
    assert all(coloring[u] != coloring[w] for u, w in c5.edges())

    try:
        hp.Hypergraph(["a"], [["a", "a"]])
    except ValueError:
        pass
    else:
        raise AssertionError("loop accepted")

    print("smoke test ok:", c5, h)


if __name__ == "__main__":
    main()
