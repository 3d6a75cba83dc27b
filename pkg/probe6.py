import time, sys
from math import comb
from coconnect import graphs, clutters
from coconnect.bitset import iter_bits, members

g = graphs.cycle_graph(8)
cc = clutters.complement_clutter(clutters.con_r(g, 5))
m = len(cc.circuits)
circuits = cc.circuits
d = cc.d
print('m =', m)

containing = {}
for i, c in enumerate(circuits):
    for v in iter_bits(c):
        z = c & ~(1 << v)
        containing[z] = containing.get(z, 0) | (1 << i)
z_items = sorted(containing.items(), key=lambda kv: members(kv[0]))

# automorphisms of C8 -> permutations of circuit indices
auts = graphs.automorphisms(g)
idx = {c: i for i, c in enumerate(circuits)}
perms = []
for pi in auts:
    table = []
    for c in circuits:
        cm = 0
        for v in iter_bits(c):
            cm |= 1 << pi[v]
        table.append(idx[cm])
    perms.append(table)
print('aut order:', len(perms))

def canon(state):
    best = state
    for table in perms:
        t = 0
        s = state
        while s:
            low = s & -s
            s ^= low
            t |= 1 << table[low.bit_length() - 1]
        if t < best:
            best = t
    return best

sys.setrecursionlimit(5000)
failed = set()
nodes = [0]
t0 = time.time()

def dfs(state):
    if state == 0:
        return True
    key = canon(state)
    if key in failed:
        return False
    nodes[0] += 1
    if nodes[0] % 20000 == 0:
        print(f'  ... {nodes[0]} states, memo {len(failed)}, {time.time()-t0:.0f}s', flush=True)
    live = [circuits[i] for i in iter_bits(state)]
    for z, star_all in z_items:
        star = star_all & state
        if not star:
            continue
        closed = z
        for i in iter_bits(star):
            closed |= circuits[i]
        inside = sum(1 for c in live if not c & ~closed)
        if inside != comb(closed.bit_count(), d):
            continue
        if dfs(state & ~star_all):
            return True
    failed.add(key)
    return False

ok = dfs((1 << m) - 1)
print('chordal:', ok, 'states:', nodes[0], f'{time.time()-t0:.1f}s')
