"""The seven acceptance criteria, at exact equality and with their runtime budgets.

Each test prints one PASS/FAIL line; the same lines are repeated in the
terminal summary by ``conftest.pytest_terminal_summary``.
"""

import shutil
import subprocess
import sys
import time

from qmacd.dunkl import apply_phi, apply_phihat
from qmacd.macdonald import nonsym_macdonald
from qmacd.polyring import XPoly
from qmacd.qtfield import ONE, Q, T
from qmacd.suites import (
    dunkl_suite,
    hecke_suite,
    kernel_suite,
    macdonald_suite,
    uplus_suite,
    raising_suite,
)

NS = (2, 3)
RESULTS: dict[int, str] = {}

def _record(num, title, results, seconds, budget, note=""):
    failed = [r for r in results if not r.passed]
    ok = not failed and seconds <= budget
    status = "PASS" if ok else "FAIL"
    line = (f"acceptance {num} {title}: {status} "
            f"({len(results)} checks, {seconds:.1f}s of {budget}s){note}")
    if failed:
        line += f" first failure: {failed[0].identity} {failed[0].counterexample}"
    RESULTS[num] = line
    print(line)
    assert not failed, [r.to_json() for r in failed]
    assert seconds <= budget

def _sweep(fn, degree):
    t0 = time.perf_counter()
    res = [r for n in NS for r in fn(n, degree)]
    return res, time.perf_counter() - t0

def test_1_hecke_suite():
    res, dt = _sweep(hecke_suite, 4)
    _record(1, "Hecke relations", res, dt, 60, note=" [Y_i x_n relation in corrected form]")

def test_2_macdonald_suite():
    res, dt = _sweep(macdonald_suite, 4)
    _record(2, "Macdonald polynomials", res, dt, 120)

def test_3_dunkl_suite():
    res, dt = _sweep(dunkl_suite, 4)
    _record(3, "q-Dunkl operators", res, dt, 120, note=" [[D_i,Y_n] read with factor (1 - t^(n-1) Y_n)]")

def test_4_raising_lowering_suite():
    from qmacd.checks import CheckResult

    t0 = time.perf_counter()
    res = [r for n in NS for r in raising_suite(n, 4)]
    worked = [
        CheckResult("Phi E_(0,0) = t^-1 E_(0,1)", apply_phi(nonsym_macdonald((0, 0)))
                    == nonsym_macdonald((0, 1)).scale(ONE / T), 1),
        CheckResult("Phihat E_(0,1) = t(1-qt)", apply_phihat(nonsym_macdonald((0, 1)))
                    == XPoly.constant(2, T * (ONE - Q * T)), 1),
    ]
    _record(4, "raising/lowering", res + worked, time.perf_counter() - t0, 60)

def test_5_kernel_suite():
    t0 = time.perf_counter()
    res = [r for n in NS for r in kernel_suite(n, 4)]
    dt = time.perf_counter() - t0
    assert any("(1-q)E_0," in r.identity for r in res)
    assert any("U+ K_A" in r.identity for r in res)
    _record(5, "kernel (K_A properties a/b/c, U+ K_A, E_0,m)", res, dt, 600)

def test_6_uplus_proportionality():
    res, dt = _sweep(uplus_suite, 3)
    _record(6, "U+ E_eta = a_eta P and bar-invariance of P", res, dt, 60)

def _qmacd_cmd():
    exe = shutil.which("qmacd")
    return [exe] if exe else [sys.executable, "-m", "qmacd"]

def test_7_determinism():
    from qmacd.checks import CheckResult

    cmd = _qmacd_cmd() + ["kernel", "--n", "2", "--degree", "3", "--check", "a,b,c,uplus"]
    t0 = time.perf_counter()
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    dt = time.perf_counter() - t0
    res = [
        CheckResult("first run exits 0", a.returncode == 0, 1),
        CheckResult("second run exits 0", b.returncode == 0, 1),
        CheckResult("reports byte-identical", a.stdout == b.stdout and len(a.stdout) > 0, 1),
    ]
    _record(7, "determinism of kernel reports", res, dt, 60)
