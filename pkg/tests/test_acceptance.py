"""Exit criteria. Every comparison is exact; the only numeric tolerance is the sweep runtime."""
import json
import random
import subprocess
import sys
import time
from pathlib import Path

import numpy as np

from conftest import random_poly
from trihopf.hopf import (
    CoherenceReport,
    associativity_check,
    coassociativity_check,
    coherence_check,
    multiply,
    y,
)
from trihopf.graded import graded_quotient, graded_rank
from trihopf.kledger import octahedron_relations, orbit_decomposition, solve_octahedron
from trihopf.laurent import lp_eval_one, parse_text
from trihopf.parabolic import (
    braid_permutation,
    double_cosets,
    flatten_dims,
    quadruples,
    shift_dimension,
    unipotent_dims,
    weighted_inversions,
)
from trihopf.qcomb import betti, box_partitions, q_binomial

GOLDEN = Path(__file__).parent / "golden"


def tuples(bound):
    for s in range(bound + 1):
        for n in range(s + 1):
            for p in range(s + 1):
                yield n, s - n, p, s - p


def pascal(limit):
    rows = [[1]]
    for n in range(1, limit + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return rows


def test_coherence_axiom(criterion):
    start = time.perf_counter()
    results = [coherence_check(*t) for t in tuples(12)]
    elapsed = time.perf_counter() - start
    bad = [r for r in results if not r.equal]
    ok = not bad and elapsed < 10.0
    criterion("coherence axiom, n+m=p+q<=12", ok, "%d tuples, %d failures, %.2fs" % (len(results), len(bad), elapsed))
    assert not bad
    assert elapsed < 10.0


def test_multiplication_table(criterion):
    ok = multiply(y(1), y(1)) == y(2, parse_text("1 + q^-2"))
    for k in range(11):
        for l in range(11):
            prod = multiply(y(k), y(l))
            ok &= prod.coeffs == ((k + l, q_binomial(k + l, k)),)
    criterion("multiplication table y_k*y_l, k,l<=10", ok)
    assert ok


def test_grassmannian_triple_oracle(criterion):
    mismatches = []
    for k in range(7):
        for l in range(7):
            from_binom = betti(k, l).values
            from_box = box_partitions(k, l).values
            rank = graded_rank(k, l, k * l)
            from_series = tuple(rank.coeff(-2 * i) for i in range(k * l + 1))
            if not (from_binom == from_box == from_series) or sum(from_series) != lp_eval_one(rank):
                mismatches.append((k, l))
    criterion("Grassmannian betti = box count = graded rank, k,l<=6", not mismatches, "%d mismatches" % len(mismatches))
    assert not mismatches


def test_classical_limit(criterion):
    table = pascal(20)
    bad = [(k, l) for k in range(11) for l in range(11) if lp_eval_one(q_binomial(k + l, k)) != table[k + l][k]]
    criterion("classical limit q=1 vs Pascal, k,l<=10", not bad)
    assert not bad


def test_orbit_quadruple_bijection(criterion):
    bad = []
    for n, m, p, q in tuples(12):
        a = len(double_cosets((p, q), (n, m)))
        b = len(quadruples(n, m, p, q))
        c = len(coherence_check(n, m, p, q).terms)
        if not a == b == c:
            bad.append((n, m, p, q))
    criterion("double cosets = quadruples = report terms, <=12", not bad)
    assert not bad


def test_shift_identity(criterion):
    rng = np.random.default_rng(20261019)
    bad = 0
    for k in range(1, 6):
        for l in range(1, 6):
            perm = braid_permutation(k, l)
            for _ in range(100):
                g = rng.integers(0, 5, size=(k, l))
                inv = weighted_inversions(perm, flatten_dims(g))
                if not inv == shift_dimension(g) == unipotent_dims(g).dim_quotient:
                    bad += 1
    criterion("shift identity, 100 grids per (k,l), 1<=k,l<=5", bad == 0, "%d failures of 2500" % bad)
    assert bad == 0


def test_octahedron_ledger(criterion):
    rng = random.Random(20261019)
    rep = octahedron_relations()
    oct_ok = rep.consistent
    for _ in range(200):
        vals = solve_octahedron({x: random_poly(rng) for x in "RQF"})
        oct_ok &= all(r.satisfied(vals) for r in rep.relations)
        oct_ok &= rep.via_z.evaluate(vals) == rep.via_s.evaluate(vals)
    iff_ok = all(orbit_decomposition(*t)[1] == coherence_check(*t).equal for t in tuples(10))
    criterion("octahedron: 200 assignments, both reductions agree", oct_ok)
    criterion("orbit decomposition <=> coherence, n+m<=10", iff_ok)
    assert oct_ok and iff_ok


def test_associativity_coassociativity(criterion):
    assoc = all(associativity_check(a, b, c) for a in range(7) for b in range(7) for c in range(7))
    coassoc = all(coassociativity_check(n) for n in range(11))
    criterion("associativity a,b,c<=6 and coassociativity n<=10", assoc and coassoc)
    assert assoc and coassoc


def test_freeness_shadow(criterion):
    bad = [(k, l) for k in range(6) for l in range(6) if any(graded_quotient(k, l, k * l + 10).coeffs[k * l + 1:])]
    criterion("graded rank tail vanishes in degrees kl+1..kl+10, k,l<=5", not bad)
    assert not bad


def test_cli_golden_and_round_trip(criterion):
    commands = {
        "qbinom_4_2.txt": ["qbinom", "4", "2"],
        "coherence_2_1_1_2.json": ["coherence", "2", "1", "1", "2", "--format", "json"],
        "sweep_bound_4.txt": ["coherence-sweep", "--bound", "4"],
        "ledger_octahedron.txt": ["ledger-octahedron"],
        "decompose_2_2_2_2.txt": ["decompose", "2", "2", "2", "2"],
    }
    ok = True
    for name, args in commands.items():
        outs = [subprocess.run([sys.executable, "-m", "trihopf", *args], capture_output=True, text=True)
                for _ in range(2)]
        ok &= all(o.returncode == 0 for o in outs)
        ok &= outs[0].stdout == outs[1].stdout == (GOLDEN / name).read_text()
    raw = (GOLDEN / "coherence_2_1_1_2.json").read_text()
    report = CoherenceReport.from_json(json.loads(raw))
    ok &= report == coherence_check(2, 1, 1, 2)
    ok &= json.dumps(report.to_json(), sort_keys=True) + "\n" == raw
    criterion("CLI golden files byte-identical, JSON round-trips", ok)
    assert ok
