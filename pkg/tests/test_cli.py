import io

import pytest

from rptc.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_r6():
    assert run("r", "6") == (0, "r(6) = 7\n")


def test_r_schedule():
    code, text = run("r", "152", "--schedule", "--format", "csv")
    assert code == 0
    assert "l,d,parity,numerator,r" in text and text.endswith("r(152) = 5\n")


def test_r_power_of_two_successor(capsys):
    code, _ = run("r", "7")
    assert code == 1
    assert "power of two" in capsys.readouterr().err


def test_stab12():
    code, text = run("stab", "12")
    assert code == 0
    assert "s(12) = 5" in text and "r(12) = 5" in text and "G-limit = 0" in text


def test_zcl_and_table():
    code, text = run("zcl", "6", "3", "--format", "jsonl")
    assert code == 0 and '"zcl": 14' in text
    code, text = run("gap-table", "6", "--format", "csv")
    assert text.splitlines() == ["m,s,zcl,gap", "6,2,7,5", "6,3,14,4", "6,4,21,3", "6,5,28,2", "6,6,35,1", "6,7,42,0"]


def test_bounds_and_conjectures():
    code, text = run("bounds", "2", "4")
    assert code == 0 and "TC_4(RP^2) = 8" in text
    code, text = run("conjectures", "--a-max", "3")
    assert code == 0 and "TC_2(RP^24) = 39" in text


def test_cbe():
    assert run("cbe", "152")[1].startswith("cbe(152) = (1, 2, 2, 3)")


@pytest.mark.parametrize("argv", [[], ["zcl", "6", "1"], ["r", "x"], ["verify", "nothing"], ["sweep", "--m-from", "3", "--m-to", "1"],
                                  ["sweep", "--m-from", "1", "--m-to", "2", "--s-max", "q"], ["r", "0"]])
def test_argument_errors(argv, capsys):
    assert run(*argv)[0] == 1


def test_verify_closed_forms_csv():
    code, text = run("verify", "closed-forms", "--m-max", "64")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "m,case,r_predicted,r_actual,match"
    assert "6,SingleBlock,7,7,1" in lines


def test_verify_theorems_and_fib():
    code, text = run("verify", "theorems", "--m-max", "64", "--report", "unequal")
    assert code == 0 and "50,0,5,7,0" in text
    assert run("verify", "fib", "--depth", "12")[0] == 0


def test_verify_oracle_small():
    code, text = run("verify", "oracle", "--samples", "20")
    assert code == 0 and "0 mismatches" in text


def test_inconsistency_exit_code(monkeypatch):
    from rptc import cli
    from rptc.errors import TheoremViolation

    def boom(m):
        raise TheoremViolation("forced")
    monkeypatch.setattr(cli, "stabilization", boom)
    assert run("stab", "12")[0] == 2


def test_sweep_stdout():
    code, text = run("sweep", "--m-from", "6", "--m-to", "6", "--s-max", "3")
    assert code == 0 and text == "m,s,zcl,gap,witness\n6,2,7,5,7\n6,3,14,4,7 7\n"
