"""Smoke test for the pypmean extension module."""

import math

import pypmean as pm


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    assert close(pm.arcsin_p(2.0, 0.5), math.pi / 6)
    assert close(pm.arctanh_p(2.0, 0.5), math.atanh(0.5))
    assert close(pm.pi_p(2.0), math.pi)
    pi4, a4, b4, c4 = pm.constants(4.0)
    assert close(pi4, 2.221441469079183)
    assert close(pm.arctan_p(4.0, 1.0), b4)
    assert close(pm.arcsinh_p(4.0, 1.0), c4)
    theta = 0.7
    assert close(pm.arcsin_p(3.0, pm.sin_p(3.0, theta)), theta, 1e-10)
    assert close(pm.gamma(0.5), math.sqrt(math.pi))
    assert close(pm.hyp2f1(0.5, 0.5, 1.5, 0.25), math.asin(0.5) / 0.5)

    assert close(pm.tilde_mean("P", 2.0, 3.0, 1.0), 6 / math.pi)
    rows = pm.all_means(3.0, 4.0, 1.0)
    assert len(rows) == 17
    assert all(1.0 < v < 4.0 for _, v in rows)

    assert close(pm.solve_x0(2.0, 4.0), math.sqrt(math.sqrt(2) - 1))
    reports = pm.verify(["T1"], p=[2.0, 3.0], x=[0.25, 0.5])
    assert len(reports) == 2 * 2 * 6
    assert all(r.status in ("holds", "holds-with-equality") for r in reports)
    printed = [r for r in pm.verify(["T4"], p=[3.0], x=[0.9]) if r.variant == "as-printed"]
    assert any(r.status == "violated" for r in printed)

    for bad in (lambda: pm.arcsin_p(1.0, 0.5), lambda: pm.solve_x0(4.0, 2.0), lambda: pm.verify(["T9"])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    print("pypmean smoke test passed")


if __name__ == "__main__":
    main()
