"""Backend selection: env flag, explicit switching, numba availability."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from ptfkit import _simplex


def test_default_backend_is_usable():
    assert _simplex.get_backend() in ("numba", "numpy")


def test_set_backend_validates_name():
    with pytest.raises(ValueError):
        _simplex.set_backend("cuda")


def test_numba_backend_requires_numba():
    if _simplex._HAS_NUMBA:
        saved = _simplex.get_backend()
        try:
            _simplex.set_backend("numba")
            assert _simplex.get_backend() == "numba"
        finally:
            _simplex.set_backend(saved)
    else:
        with pytest.raises(ValueError):
            _simplex.set_backend("numba")


@pytest.mark.parametrize("env_value", ["numpy", "numba"])
def test_env_flag_selects_backend(env_value):
    code = (
        "import json\n"
        "from ptfkit import _simplex, lp\n"
        "import ptfkit\n"
        "f = ptfkit.parse_table('0110')\n"
        "print(json.dumps({'backend': _simplex.get_backend(),"
        " 'order2': ptfkit.order(f)}))\n"
    )
    proc = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PTFKIT_BACKEND": env_value, "PATH": "/usr/bin:/bin"},
    )
    assert proc.returncode == 0, proc.stderr
    out = json.loads(proc.stdout)
    expected = env_value if (env_value != "numba" or _simplex._HAS_NUMBA) else "numpy"
    assert out["backend"] == expected
    assert out["order2"] == 2
