from nhomalg.algebra import GradedAlgebra
from nhomalg.catalog import make_entry
from nhomalg.checks import run_checks
from nhomalg.relfile import parse_relations


def test_run_checks_parafermion_all_pass():
    entry = make_entry("parafermion", D=2)
    results = run_checks(GradedAlgebra(entry.presentation), 5, entry)
    assert results and all(r.passed for r in results)
    names = [r.name for r in results]
    assert any("rank-nullity" in n for n in names)
    assert any("invariant under all elementary derivations" in n for n in names)


def test_run_checks_plactic_includes_expected_failure_invariant():
    entry = make_entry("plactic", D=2)
    results = run_checks(GradedAlgebra(entry.presentation), 5, entry)
    assert all(r.passed for r in results)
    assert any("not invariant" in r.name for r in results)
    assert any("tableau counts" in r.name for r in results)


def test_run_checks_family_member():
    entry = make_entry("artin_schelter", q=2)
    results = run_checks(GradedAlgebra(entry.presentation), 4, entry)
    assert all(r.passed for r in results)
    assert any("central" in r.name for r in results)


def test_run_checks_on_file_algebra_without_entry():
    pres = parse_relations("D=2 N=3\n1*221 - 1*212\n1*211 - 1*121\n")
    results = run_checks(GradedAlgebra(pres), 4, None)
    assert results and all(r.passed for r in results)
