import importlib.util
import pathlib
import sys

SCRIPTS = pathlib.Path(__file__).resolve().parent.parent / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod
    spec.loader.exec_module(mod)
    return mod


def test_reproduce_tables(capsys):
    mod = load("reproduce_tables")
    assert mod.run(mod.Config(tables=(3, 2))) == 0
    assert "Table 3: 12/12 cells match" in capsys.readouterr().out


def test_oracle_sweep_small(capsys):
    mod = load("oracle_sweep")
    assert mod.run(mod.Config(primes=(2,), max_n=2, max_points=40)) == 0
    assert "sequences agree on every check" in capsys.readouterr().out
