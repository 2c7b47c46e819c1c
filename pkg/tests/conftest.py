"""Shared test configuration.

Prints a one-line verdict per acceptance check after the run, so the
suite's gate is readable without scrolling the full pytest output.
"""

_ACCEPTANCE_LABELS = {
    "test_spectrum_matches_closed_form":
        "spectrum equals the cosine closed form within 1e-10 (42 desk instances)",
    "test_total_mass_and_branch_marginal":
        "outcome mass totals 1 within 1e-12; nonzero shifts split the c register evenly",
    "test_extremal_orthogonal_count":
        "extremal orthogonal counts 2/32/512/1024 with exhaustive maximality",
    "test_orthogonal_fraction_bound":
        "orthogonal fraction <= 2^-3k exhaustively and in seeded sweeps",
    "test_solution_transport_maps":
        "transport maps preserve inner products and the count relations",
    "test_doubling_map_injectivity":
        "doubling map injectivity on full solution sets",
    "test_alternating_binomial_identities":
        "alternating binomial identities hold as exact integers",
    "test_end_to_end_recovery":
        "planted shifts recovered end to end at the required rates",
    "test_counting_oracles_agree":
        "enumeration and gcd counting agree on every tested vector",
    "test_sampler_fidelity":
        "sampler passes chi-square fidelity and reproduces streams byte for byte",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for key, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(key, []):
            fname, _, testname = rep.location
            if not fname.endswith("test_acceptance.py"):
                continue
            base = testname.split("[")[0]
            if base in _ACCEPTANCE_LABELS and outcomes.get(base) != "FAIL":
                outcomes[base] = verdict
    if not outcomes:
        return
    terminalreporter.section("acceptance summary")
    for name, label in _ACCEPTANCE_LABELS.items():
        if name in outcomes:
            terminalreporter.write_line(f"{outcomes[name]}  {label}")
