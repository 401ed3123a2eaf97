"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE k (<label>): PASS/FAIL`` line (visible
under ``pytest -s``) and asserts the criterion, including its runtime budget
where one is stated.  All comparisons are exact; there are no tolerances to
tune.
"""

import json
import random
import time

import pytest

import jordanblocks.verify as verify_mod
from jordanblocks.cli import main as cli_main
from jordanblocks.oracle import (
    RankSequence,
    oracle_jordan_partition,
    oracle_rank_sequence,
    partition_from_ranks,
)
from jordanblocks.partitions import composition
from jordanblocks.verify import (
    SweepSpec,
    check_invariants,
    check_oracle_agreement,
    check_periodicity,
    check_reflection,
    check_theorem1,
)


def _criterion(num, label, ok, detail):
    verdict = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num} ({label}): {verdict} -- {detail}")
    assert ok, f"criterion {num} ({label}): {detail}"


@pytest.fixture(scope="module", autouse=True)
def warm_kernels():
    # JIT-compile the elimination kernels before anything is timed
    oracle_jordan_partition(2, 3, 2, method="flag")
    oracle_jordan_partition(2, 3, 3, method="flag")
    oracle_jordan_partition(2, 3, 2, method="dense")


def test_criterion_1_golden_vectors():
    t0 = time.perf_counter()
    got = tuple(composition(3, n, 2).parts for n in (4, 5, 6, 7))
    elapsed = time.perf_counter() - t0
    want = ((3,), (1, 2), (1, 1, 1), (2, 1))
    _criterion(
        1, "golden vectors",
        got == want and elapsed < 1.0,
        f"c(3,4..7,2) = {got} in {elapsed * 1000:.2f} ms",
    )


def test_criterion_2_power_of_two_family():
    t0 = time.perf_counter()
    bad = []
    for t in range(0, 7):
        size = 2**t
        if composition(size, size, 2).parts != (size,):
            bad.append((size, size))
        for i in range(1, size):
            if composition(size, size + i, 2).parts != (i, size - i):
                bad.append((size, size + i))
    elapsed = time.perf_counter() - t0
    _criterion(
        2, "power-of-two family",
        not bad and elapsed < 1.0,
        f"t <= 6 checked in {elapsed:.3f} s, mismatches: {bad[:5]}",
    )


def test_criterion_3_standardness_exhaustive_to_256():
    t0 = time.perf_counter()
    report = check_theorem1(256, 256)
    elapsed = time.perf_counter() - t0
    _criterion(
        3, "standardness predicate exhaustive",
        report.passed and report.cases_checked == 256 * 257 // 2 and elapsed < 10.0,
        f"{report.cases_checked} pairs, {report.failure_count} mismatches, {elapsed:.2f} s",
    )


def test_criterion_4_oracle_agreement():
    t0 = time.perf_counter()
    reports = [
        check_oracle_agreement(SweepSpec(m_max=48, n_max=48, primes=(2,))),
        check_oracle_agreement(SweepSpec(m_max=24, n_max=24, primes=(3,))),
        check_oracle_agreement(SweepSpec(m_max=24, n_max=24, primes=(5,))),
    ]
    elapsed = time.perf_counter() - t0
    cases = sum(r.cases_checked for r in reports)
    fails = sum(r.failure_count for r in reports)
    _criterion(
        4, "oracle agreement",
        fails == 0 and cases == 1176 + 300 + 300 and elapsed < 120.0,
        f"{cases} pairs (p=2 to 48, p=3/5 to 24), {fails} mismatches, {elapsed:.1f} s",
    )


def _theorem2_grid():
    for p in (2, 3):
        t = 0
        while p**t <= 32:
            for m in range(1, p**t + 1):
                yield p, t, m
            t += 1


def test_criterion_5_periodicity():
    cases = 0
    fails = 0
    for p, t, m in _theorem2_grid():
        report = check_periodicity(m, t, p, n_max=4 * p**t)
        cases += report.cases_checked
        fails += report.failure_count
    _criterion(
        5, "periodicity",
        fails == 0 and cases > 0,
        f"{cases} (m, n) cases over p in {{2, 3}}, p^t <= 32; {fails} mismatches",
    )


def test_criterion_6_reflection():
    cases = 0
    fails = 0
    for p, t, m in _theorem2_grid():
        report = check_reflection(m, t, p)
        cases += report.cases_checked
        fails += report.failure_count
    _criterion(
        6, "reflection",
        fails == 0 and cases > 0,
        f"{cases} (m, i) cases over p in {{2, 3}}, p^t <= 32; {fails} mismatches",
    )


def test_criterion_7_structural_invariants():
    t0 = time.perf_counter()
    report = check_invariants(n_max=1024, primes=(2, 3, 5, 7), samples=10_000, seed=2024)
    elapsed = time.perf_counter() - t0
    _criterion(
        7, "structural invariants",
        report.passed and report.cases_checked == 10_000 and elapsed < 30.0,
        f"{report.cases_checked} random triples, {report.failure_count} violations, {elapsed:.1f} s",
    )


def test_criterion_8_oracle_internal_soundness():
    problems = []
    for p in (2, 3):
        for n in range(1, 13):
            for m in range(1, n + 1):
                ranks = oracle_rank_sequence(m, n, p).ranks
                if ranks[0] != m * n or ranks[-1] != 0:
                    problems.append((m, n, p, ranks))
                    continue
                if any(a <= b for a, b in zip(ranks, ranks[1:])):
                    problems.append((m, n, p, ranks))
                    continue
                diffs = [a - b for a, b in zip(ranks, ranks[1:])]
                if any(x < y for x, y in zip(diffs, diffs[1:])):
                    problems.append((m, n, p, ranks))
    # the validators themselves must be armed
    validators_armed = True
    try:
        RankSequence((4, 4, 0))
        validators_armed = False
    except ValueError:
        pass
    try:
        partition_from_ranks(RankSequence((4, 3, 0)))
        validators_armed = False
    except ValueError:
        pass
    sensitivity = (
        oracle_jordan_partition(2, 2, 2).expanded() == (2, 2)
        and oracle_jordan_partition(2, 2, 3).expanded() == (3, 1)
    )
    _criterion(
        8, "oracle internal soundness",
        not problems and validators_armed and sensitivity,
        f"rank sequences valid on grid (bad: {problems[:3]}), "
        f"validators armed: {validators_armed}, characteristic fixture: {sensitivity}",
    )


def test_criterion_9_cli_contract(capsys, monkeypatch):
    ok_compute = cli_main(["compute", "--m", "3", "--n", "6", "--p", "2"]) == 0
    ok_verify = cli_main(
        ["verify", "--suite", "theorem1", "--m-max", "6", "--n-max", "12"]
    ) == 0
    usage_codes = (
        cli_main(["compute", "--m", "3", "--n", "6", "--p", "4"]),
        cli_main(["compute", "--m", "0", "--n", "6", "--p", "2"]),
        cli_main(["verify", "--suite", "nonsense"]),
        cli_main(["oracle", "--m", "300", "--n", "300", "--p", "2"]),
    )
    monkeypatch.setattr(verify_mod, "standard_predicate_p2", lambda m, n: False)
    failing = cli_main(["verify", "--suite", "theorem1", "--m-max", "4", "--n-max", "8"])
    monkeypatch.undo()
    capsys.readouterr()

    rng = random.Random(99)
    round_trips = 0
    for _ in range(100):
        n = rng.randint(1, 256)
        m = rng.randint(1, n)
        p = rng.choice([2, 3, 5, 7])
        args = ["compute", "--m", str(m), "--n", str(n), "--p", str(p)]
        assert cli_main(args + ["--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert cli_main(args) == 0
        text = dict(
            line.split(": ", 1) for line in capsys.readouterr().out.splitlines()[1:]
        )
        if (
            text["composition"] == "+".join(map(str, doc["composition"]))
            and text["partition"] == " ".join(map(str, doc["partition"]))
            and text["standard"] == ("true" if doc["standard"] else "false")
            and (doc["m"], doc["n"], doc["p"]) == (m, n, p)
        ):
            round_trips += 1

    with capsys.disabled():
        _criterion(
            9, "CLI contract",
            ok_compute
            and ok_verify
            and all(code == 2 for code in usage_codes)
            and failing == 1
            and round_trips == 100,
            f"exit codes 0/1/2 verified, JSON round-trip {round_trips}/100",
        )
