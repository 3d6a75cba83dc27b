import time, sys
from math import comb
from coconnect import graphs, clutters
from coconnect.bitset import iter_bits, members

def probe(h, order='asc', budget=3000):
    m = len(h.circuits)
    circuits = h.circuits
    containing = {}
    for i, c in enumerate(circuits):
        for v in iter_bits(c):
            z = c & ~(1 << v)
            containing[z] = containing.get(z, 0) | (1 << i)
    z_list = sorted(containing, key=members)
    failed = set()
    nodes = [0]
    sys.setrecursionlimit(m + 500)
    class Stop(Exception): pass
    def dfs(state):
        if state == 0: return True
        if state in failed: return False
        nodes[0] += 1
        if nodes[0] > budget: raise Stop
        live = [circuits[i] for i in iter_bits(state)]
        cands = []
        for z in z_list:
            star = containing[z] & state
            if not star: continue
            closed = z
            for i in iter_bits(star): closed |= circuits[i]
            if order == 'asc': key = (closed.bit_count(), members(z))
            elif order == 'desc': key = (-closed.bit_count(), members(z))
            else: key = (-star.bit_count(), closed.bit_count(), members(z))
            cands.append((key, z, closed))
        cands.sort()
        for _, z, closed in cands:
            inside = sum(1 for c in live if not c & ~closed)
            if inside != comb(closed.bit_count(), h.d): continue
            if dfs(state & ~containing[z]): return True
        failed.add(state)
        return False
    try:
        ok = dfs((1 << m) - 1)
        return ok, nodes[0]
    except Stop:
        return None, nodes[0]

for name, g, r in [('ladder5 r=5', graphs.ladder_graph(5), 5),
                   ('ladder5 r=6', graphs.ladder_graph(5), 6),
                   ('ladder4 r=4', graphs.ladder_graph(4), 4)]:
    cc = clutters.complement_clutter(clutters.con_r(g, r))
    for order in ('asc', 'desc', 'star'):
        t = time.time()
        ok, nodes = probe(cc, order=order, budget=2000)
        print(f'{name} m={cc.circuit_count()} order={order}: ok={ok} nodes={nodes} {time.time()-t:.1f}s', flush=True)
