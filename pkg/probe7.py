import time
import numpy as np
import numba as nb
from math import comb
from coconnect import graphs, clutters
from coconnect.bitset import iter_bits, members

g = graphs.cycle_graph(8)
cc = clutters.complement_clutter(clutters.con_r(g, 5))
m = len(cc.circuits)
circuits = cc.circuits
d = cc.d
n = cc.n
print('m =', m)

containing = {}
for i, c in enumerate(circuits):
    for v in iter_bits(c):
        z = c & ~(1 << v)
        containing[z] = containing.get(z, 0) | (1 << i)
zs = sorted(containing, key=members)
z_verts = np.array(zs, dtype=np.int64)
z_star = np.array([containing[z] for z in zs], dtype=np.int64)
circ = np.array(circuits, dtype=np.int64)
comb_tab = np.zeros(n + 2, dtype=np.int64)
for w in range(n + 2):
    comb_tab[w] = comb(w, d) if w >= d else 0

auts = graphs.automorphisms(g)
idx = {c: i for i, c in enumerate(circuits)}
perm_tables = []
for pi in auts:
    table = []
    for c in circuits:
        cm = 0
        for v in iter_bits(c):
            cm |= 1 << pi[v]
        table.append(idx[cm])
    perm_tables.append(table)
perms = np.array(perm_tables, dtype=np.int64)
print('aut order:', len(perm_tables))


@nb.njit(cache=False)
def canon(state, perms, m):
    best = state
    for p in range(perms.shape[0]):
        t = 0
        s = state
        while s:
            low = s & -s
            i = 0
            ll = low
            while ll > 1:
                ll >>= 1
                i += 1
            s ^= low
            t |= 1 << perms[p, i]
        if t < best:
            best = t
    return best


@nb.njit(cache=False)
def dfs(state, circ, z_verts, z_star, comb_tab, perms, memo, m, counter):
    if state == 0:
        return True
    key = canon(state, perms, m)
    if key in memo:
        return False
    counter[0] += 1
    for zi in range(z_verts.shape[0]):
        star = z_star[zi] & state
        if star == 0:
            continue
        closed = z_verts[zi]
        s = star
        while s:
            low = s & -s
            i = 0
            ll = low
            while ll > 1:
                ll >>= 1
                i += 1
            s ^= low
            closed |= circ[i]
        w = 0
        cl = closed
        while cl:
            cl &= cl - 1
            w += 1
        inside = 0
        t = state
        while t:
            low = t & -t
            i = 0
            ll = low
            while ll > 1:
                ll >>= 1
                i += 1
            t ^= low
            if circ[i] & ~closed == 0:
                inside += 1
        if inside != comb_tab[w]:
            continue
        if dfs(state & ~z_star[zi], circ, z_verts, z_star, comb_tab, perms, memo, m, counter):
            return True
    memo[key] = True
    return False


memo = nb.typed.Dict.empty(nb.int64, nb.boolean)
counter = np.zeros(1, dtype=np.int64)
t0 = time.time()
full = np.int64((1 << m) - 1)
ok = dfs(full, circ, z_verts, z_star, comb_tab, perms, memo, m, counter)
print('chordal:', ok, 'states:', counter[0], 'memo:', len(memo), f'{time.time()-t0:.1f}s')
