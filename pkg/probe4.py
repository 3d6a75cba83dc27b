import time
from coconnect import graphs, clutters

cases = []
for n in range(2, 6):
    for r in range(2, 7):
        cases.append((f'ladder{n} r={r}', graphs.ladder_graph(n), r, n <= r))
for n in range(3, 9):
    for r in range(2, 7):
        cases.append((f'cycle{n} r={r}', graphs.cycle_graph(n), r, n <= r + 2))
for r in (5, 6, 7):
    cases.append((f'grid3x3 r={r}', graphs.grid3_graph(3), r, 6 <= r))
cases.append(('unicyclic3 r=3', graphs.unicyclic_graph(3), 3, True))
cases.append(('unicyclic4 r=4', graphs.unicyclic_graph(4), 4, True))

bad = []
t_all = time.time()
for name, g, r, expect in cases:
    cc = clutters.complement_clutter(clutters.con_r(g, r))
    t = time.time()
    ok, cert = clutters.is_chordal_clutter(cc)
    dt = time.time() - t
    if ok:
        vok, vidx = clutters.verify_elimination(cc, cert)
        assert vok, (name, vidx)
    if ok != expect:
        bad.append(name)
    print(f'{name}: m={cc.circuit_count():3d} cochordal={ok} expect={expect} {dt:6.2f}s', flush=True)
print(f'total {time.time()-t_all:.1f}s')
print('verdict mismatches:', bad)
