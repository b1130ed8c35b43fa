#!/usr/bin/env python
"""
Smoke test for an installed rotcocycle wheel.

Run after ``pip install rotcocycle`` (outside the source tree) to check the
public API, the console script and the packaged type marker.
"""

import json
import subprocess
import sys
from pathlib import Path

import rotcocycle


def check_version():
    print("[✓] Version:", rotcocycle.__version__)
    assert isinstance(rotcocycle.__version__, str)


def check_relator_translation():
    print("\n[Check] Relator translation")
    for genus, expected in ((2, -2), (3, -4)):
        ctx = rotcocycle.context(genus)
        value = rotcocycle.trans_word(ctx, rotcocycle.relator(genus))
        assert value == expected, f"genus {genus}: trans(c) = {value}, expected {expected}"
    print("[✓] trans(c) = 2 - 2g for g = 2, 3")


def check_point_push():
    print("\n[Check] Point push")
    ctx = rotcocycle.context(2)
    phi = rotcocycle.parse_expression("push(a1)", genus=2)
    values = rotcocycle.R_on_homology(ctx, phi)
    assert values == (0, -2, 0, 0), f"R(push(a1)) on generators: {values}"
    print("[✓] R(push(a1)) = (0, -2, 0, 0)")


def check_tau():
    print("\n[Check] Euler cocycle")
    ctx = rotcocycle.context(2)
    a1, b1 = rotcocycle.parse_word("a1", 2), rotcocycle.parse_word("b1", 2)
    assert rotcocycle.tau(ctx, a1, b1) in (-1, 0, 1)
    assert rotcocycle.classify_cover(ctx, a1, b1).value == "punctured-torus"
    print("[✓] tau and cover type")


def check_winding_numbers():
    print("\n[Check] Winding numbers")
    fields = rotcocycle.builtin_fields(2)
    a1 = rotcocycle.parse_word("a1", 2)
    assert rotcocycle.omega(fields["X"], a1) == 1
    assert rotcocycle.omega(fields["Y"], a1) == 0
    print("[✓] omega_X(a1) = 1, omega_Y(a1) = 0")


def check_error_handling():
    print("\n[Check] Error handling")
    try:
        rotcocycle.parse_word("a1 q2", 2)
    except rotcocycle.ParseError as exc:
        assert exc.position == 3
        print("[✓] ParseError carries the position")
    else:
        raise AssertionError("expected ParseError")
    try:
        rotcocycle.context(1)
    except rotcocycle.GenusError:
        print("[✓] GenusError for genus 1")
    else:
        raise AssertionError("expected GenusError")


def check_py_typed_marker():
    marker = Path(rotcocycle.__file__).parent / "py.typed"
    assert marker.exists(), "py.typed marker missing from the wheel"
    print("[✓] py.typed marker present")


def check_console_script():
    print("\n[Check] Console script")
    try:
        result = subprocess.run(
            ["rotcocycle", "trans", "--word", "a1 b1 A1 B1 a2 b2 A2 B2"],
            capture_output=True,
            text=True,
            check=True,
        )
    except FileNotFoundError:
        print("[⚠] rotcocycle script not on PATH")
        return
    report = json.loads(result.stdout)
    assert report["trans"] == -2
    print("[✓] rotcocycle trans reports -2 for the relator")


def main():
    """Run all checks."""
    print("=" * 70)
    print("rotcocycle installed-package smoke test")
    print("=" * 70)

    checks = [
        check_version,
        check_relator_translation,
        check_point_push,
        check_tau,
        check_winding_numbers,
        check_error_handling,
        check_py_typed_marker,
        check_console_script,
    ]

    passed = 0
    failed = 0
    for check in checks:
        try:
            check()
            passed += 1
        except AssertionError as e:
            print(f"\n[✗] {check.__name__} FAILED: {e}")
            failed += 1
        except Exception as e:
            print(f"\n[✗] {check.__name__} ERROR: {e}")
            import traceback

            traceback.print_exc()
            failed += 1

    print("\n" + "=" * 70)
    print(f"Results: {passed} passed, {failed} failed")
    print("=" * 70)
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
