"""Shared test plumbing: collects acceptance-criterion results and prints one
pass/fail line per criterion after the run, regardless of output capture."""

CRITERIA = [
    "C01 factorization identity",
    "C02 inverse roundtrip",
    "C03 exact-kernel algebra",
    "C04 two-pulse identity",
    "C05 recorded error norms",
    "C06 leakage and peak location",
    "C07 oracle chain",
    "C08 quadrature convergence",
    "C09 fast-path scaling",
    "C10 rect peak monotonicity",
]

# name -> (ok, detail); populated by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in CRITERIA:
        entry = ACCEPTANCE_RESULTS.get(name)
        if entry is None:
            terminalreporter.write_line(f"{name}: NOT RUN")
            continue
        ok, detail = entry
        suffix = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}{suffix}")
