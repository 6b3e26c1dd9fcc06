import io

import pytest

from wpqsym.cli import run
from wpqsym.element import parse_element


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_examples_from_the_interface_description():
    assert _run("expand", "--from", "K", "--to", "M", "0,1")[1] == "2*M[1] + 4*M[0,1]\n"
    code, out, _ = _run("mul", "--basis", "K", "0,0", "0,1")
    assert code == 0
    want = parse_element("1*K[0,1,0,0] + 2*K[0,0,1,0] + 3*K[0,0,0,1] - 1*K[0,1]")
    assert parse_element(out) == want


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("frobnicate",),
        ("mul", "--basis", "X", "1", "1"),
        ("expand", "--from", "K", "0,1"),
        ("map", "phi_b", "0,0"),
        ("map", "rho", "--basis", "F", "0,1"),
        ("rb", "Phat", "--basis", "M", "0"),
        ("oracle", "product", "--vars", "3", "0"),
        ("oracle", "lambda", "--vars", "-1", "0"),
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = _run(*argv)
    assert code == 2
    assert out == ""
    assert err.startswith("wpq: error:")


def test_parse_error_reports_position_and_expectation():
    code, _, err = _run("tau", "1,x,2")
    assert code == 2
    assert "position 2" in err and "non-negative integer" in err
    code, _, err = _run("expand", "--from", "K", "--to", "M", "2*K[0,1]+K[1")
    assert code == 2
    assert "position 12" in err and "']'" in err


def test_conversion_into_K_only_on_zero_indices():
    assert _run("expand", "--from", "F", "--to", "K", "0,0")[1] == "1/4*K[0] + 1/4*K[0,0]\n"
    code, _, err = _run("expand", "--from", "F", "--to", "K", "1")
    assert code == 2 and "0^r" in err


def test_element_arguments_are_accepted():
    code, out, _ = _run("antipode", "--basis", "F", "2*F[0]+F[1]")
    assert code == 0
    assert parse_element(out) == parse_element("-2*F[0] - 1*F[1]")


def test_basis_mismatch_in_element_argument():
    code, _, err = _run("mul", "--basis", "F", "K[1]", "1")
    assert code == 2 and "basis" in err


def test_ceiling_from_environment(monkeypatch):
    monkeypatch.setenv("WPQ_MAX_TOTAL_WEIGHT", "3")
    assert _run("mul", "--basis", "M", "1,1", "1")[0] == 0
    code, _, err = _run("mul", "--basis", "M", "2,2", "1")
    assert code == 2 and "ceiling 3" in err
    code, _, _ = _run("verify", "--suite", "basis", "--max-total-weight", "4")
    assert code == 2
    # cheap commands are not capped
    assert _run("relation", "0,0,4,0,0,2,0,0,1,0,1", "2,1,3,0,1,1")[0] == 0
    monkeypatch.setenv("WPQ_MAX_TOTAL_WEIGHT", "lots")
    assert _run("tau", "1")[0] == 0
    assert _run("mul", "--basis", "M", "1", "1")[0] == 2


def test_default_ceiling_is_twelve():
    assert _run("expand", "--from", "F", "--to", "M", "0," * 11 + "1")[0] == 0
    assert _run("expand", "--from", "F", "--to", "M", "0," * 12 + "1")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("mul", "--basis", "F", "1,0", "0,0,1"),
        ("rb", "P", "1,1,0"),
        ("rb", "Phat", "0,2"),
        ("map", "Theta", "0,1,0"),
        ("map", "phi_b", "--b", "2/3", "0,0,0"),
        ("antipode", "--basis", "K", "2,0,1"),
    ],
)
def test_printed_elements_round_trip(argv):
    code, out, _ = _run(*argv)
    assert code == 0
    x = parse_element(out)
    assert str(x) + "\n" == out


def test_peaks_and_tau_and_basis():
    assert _run("peaks", "2,0,0,1,1,2")[1] == "D={2,5,6,8} P={2,5}\n"
    assert _run("tau", "1,2")[1] == "3\n"
    assert _run("tau", "e")[1] == "e\n"
    assert _run("basis", "1", "--max-zero-length", "1")[1] == "1\n0,1\n1,0\n"


def test_phi_b_rejects_indices_outside_the_zero_subalgebra():
    code, _, err = _run("map", "phi_b", "--b", "2", "0,1")
    assert code == 2 and "zero subalgebra" in err


def test_word_rejects_repeated_labels():
    code, _, err = _run("word", "--basis", "K", "1 1")
    assert code == 2 and "distinct" in err


def test_oracle_product_reports_agreement():
    code, out, _ = _run("oracle", "product", "--vars", "3", "--basis", "K", "0", "1")
    assert code == 0
    assert out.endswith("series product matches algebra product: yes\n")


def test_verify_single_suite_exit_codes():
    code, out, _ = _run("verify", "--suite", "basis", "--max-total-weight", "3")
    # the independence and support claims do not hold at this size (see the
    # decisions ledger); every other check in the suite passes
    assert code == 1
    fails = [line for line in out.splitlines() if " FAIL " in line]
    assert len(fails) == 2
    assert any("independent" in line for line in fails)
    assert any("supported on" in line for line in fails)


def test_verify_hopf_suite_passes():
    code, out, _ = _run("verify", "--suite", "hopf", "--max-total-weight", "3")
    assert code == 0
    assert "FAIL" not in out
