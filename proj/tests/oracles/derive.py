"""Independent brute-force oracle for the frozen values in the C++ tests.

Written against networkx with no shared code. Run: python3 tests/oracles/derive.py
"""
import itertools
import math

import networkx as nx


def psd_pt(g, s):
    blue = set(s)
    n = g.number_of_nodes()
    rounds = 0
    while len(blue) < n:
        white = g.subgraph(set(g) - blue)
        new = set()
        for comp in nx.connected_components(white):
            for u in blue:
                nb = [w for w in g[u] if w in comp]
                if len(nb) == 1:
                    new.add(nb[0])
        if not new:
            return math.inf
        blue |= new
        rounds += 1
    return rounds


def pt_k(g, k):
    return min(psd_pt(g, s) for s in itertools.combinations(sorted(g), k))


def params(g):
    n = g.number_of_nodes()
    pts = {k: pt_k(g, k) for k in range(1, n + 1)}
    z = min(k for k in pts if pts[k] < math.inf)
    th_sum = min(k + pts[k] for k in range(z, n + 1))
    th_times = min(k * (1 + pts[k]) for k in range(z, n + 1))
    th_star = min((k * pts[k] for k in range(z, n)), default=None)
    return dict(z=z, pt=pts[z], th_sum=th_sum, th_times=th_times, th_star=th_star, pts=pts)


def k_radius(g, k):
    d = dict(nx.all_pairs_shortest_path_length(g))
    return min(max(min(d[s][v] for s in S) for v in g) for S in itertools.combinations(sorted(g), k))


def capture_time(g, cops):
    """Plain retrograde analysis over ordered cop tuples."""
    nodes = sorted(g)
    k = len(cops)
    closed = {v: [v] + list(g[v]) for v in nodes}
    states = list(itertools.product(nodes, repeat=k))
    # val[(C, r)]: rounds to capture with cops to move, robber at r.
    val = {}
    for c in states:
        for r in nodes:
            if r in c:
                val[(c, r)] = 0
    t = 0
    while True:
        t += 1
        new = {}
        for c in states:
            for r in nodes:
                if (c, r) in val:
                    continue
                for c2 in itertools.product(*(closed[x] for x in c)):
                    if r in c2:
                        new[(c, r)] = t
                        break
                    if all((c2, r2) in val for r2 in closed[r] if r2 not in c2):
                        new[(c, r)] = t
                        break
        if not new:
            break
        val.update(new)
    free = [r for r in nodes if r not in cops]
    if not free:
        return 0
    return max(val.get((tuple(cops), r), math.inf) for r in free)


def capt_k(g, k):
    return min(capture_time(g, list(s)) for s in itertools.combinations(sorted(g), k))


def cop_number(g):
    for k in range(1, g.number_of_nodes() + 1):
        if capt_k(g, k) < math.inf:
            return k


def main():
    P = nx.path_graph
    C = nx.cycle_graph
    print("k_radius P7,2", k_radius(P(7), 2), "C8,2", k_radius(C(8), 2))
    print("th_sum P5", params(P(5))["th_sum"], "C4", params(C(4))["th_sum"], "K1,4", params(nx.star_graph(4))["th_sum"])
    pet = nx.petersen_graph()
    print("petersen", {k: v for k, v in params(pet).items() if k != "pts"})
    print("pt C6 {0,3}", psd_pt(C(6), [0, 3]), "{0,1}", psd_pt(C(6), [0, 1]))
    print("capt_k P7,1", capt_k(P(7), 1), "C6,1", capt_k(C(6), 1), "C6,2", capt_k(C(6), 2))
    print("cop number C7", cop_number(C(7)), "petersen", cop_number(pet))
    print("capt P5 {2}", capture_time(P(5), [2]), "C4 {0}", capture_time(C(4), [0]),
          "K5 {0}", capture_time(nx.complete_graph(5), [0]))
    for name, g in [("P7", P(7)), ("C12", C(12))]:
        p = params(g)
        print(name, {k: v for k, v in p.items() if k != "pts"}, "pts", p["pts"])
    print("D?{ ->", nx.to_graph6_bytes(nx.from_graph6_bytes(b"D?{"), header=False).strip())
    print("K1 ->", nx.to_graph6_bytes(nx.complete_graph(1), header=False).strip())
    print("K4 ->", nx.to_graph6_bytes(nx.complete_graph(4), header=False).strip())
    print("petersen ->", nx.to_graph6_bytes(pet, header=False).strip())
    print("D?{ edges", sorted(nx.from_graph6_bytes(b"D?{").edges()))
    # Cycle values from pt_k(C_n, k) = ceil((n-k)/(2k)).
    for n in (20, 24, 27):
        print("C%d thx" % n, min(k * (1 + -(-(n - k) // (2 * k))) for k in range(2, n + 1)))


if __name__ == "__main__":
    main()
