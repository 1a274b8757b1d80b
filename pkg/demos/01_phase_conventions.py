"""How much phase does a matter wave pick up along a path?

An optical wave of wavelength lambda accumulates 2*pi*L/lambda over a
distance L -- count the wavefronts and multiply by 2*pi.  A matter wave of
the same wavelength accumulates only half that, pi*L/lambda, because its
phase velocity is half its particle (group) velocity.  Yet the *difference*
between two interfering paths comes out approximately 2*pi*dL/lambda in
both pictures, since the paths share a duration rather than a speed and the
longer path runs faster.  This script walks through the bookkeeping.
"""

from matterslit import (
    ELECTRON,
    de_broglie_wavelength,
    matter_phase,
    naive_equal_velocity_phase_diff,
    optical_phase,
    two_path_phase_difference,
)

speed = 1.0e7  # m/s
lam = de_broglie_wavelength(ELECTRON, speed)
print(f"electron at {speed:.1e} m/s: lambda = {lam:.4e} m")

length = 3.37e-6
print(f"\nsingle path of length {length:.2e} m:")
print(f"  optical convention  2 pi L/lambda = {optical_phase(length, lam).raw:12.1f} rad")
print(f"  matter wave          pi L/lambda  = {matter_phase(length, lam).raw:12.1f} rad")
print("  (exactly a factor of two apart)")

print("\ntwo interfering paths, equal duration, growing length difference:")
duration = length / speed  # the shorter path crosses at the reference speed
print(f"{'dL/L':>8} {'exact (rad)':>14} {'2pi dL/lambda':>14} {'naive pi dL/lambda':>19}")
for ratio in (1e-4, 1e-3, 1e-2, 5e-2):
    l_b = length * (1 + ratio)
    diff = two_path_phase_difference(length, l_b, duration, ELECTRON)
    naive = naive_equal_velocity_phase_diff(length, l_b, lam).raw
    print(
        f"{ratio:8.0e} {diff.exact.raw:14.4f} {diff.first_order.raw:14.4f} {naive:19.4f}"
    )
print(
    "\nThe equal-duration result lands on the optical-looking 2 pi dL/lambda\n"
    "(not the naive half of it), and the residual grows quadratically in dL/L:"
)
for ratio in (1e-3, 1e-2):
    l_b = length * (1 + ratio)
    diff = two_path_phase_difference(length, l_b, duration, ELECTRON)
    residual = diff.exact.raw - diff.first_order.raw
    print(f"  dL/L = {ratio:.0e}: exact - first order = {residual:.3e} rad")
