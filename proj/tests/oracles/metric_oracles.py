#!/usr/bin/env python3
"""One-off oracle evaluations for the golden constants frozen in the C++ tests.

Run:  python3 tests/oracles/metric_oracles.py

Each value below is computed directly from the closed-form expression with
mpmath at 50 digits, then printed rounded to 17 significant digits (the
precision frozen into tests/test_metrics.cpp and the acceptance suite).
"""
from mpmath import mp, mpf, sqrt, cos, sin, atan, degrees, radians, power

mp.dps = 50


def show(name, v):
    print(f"{name:34s} = {mp.nstr(v, 17)}")


# --- Wheel sinkage, dry sand, flat ground -------------------------------
# z = (3 W cos(theta) / ((3-n)(k_c + b k_phi) sqrt(d)))^(2/(2n+1)), SI with
# forces in kN and lengths in metres; result converted to mm.
n = mpf("1.10")
k_c = mpf("0.1")
k_phi = mpf("3.9")
b_w = mpf("0.075")   # m
d_w = mpf("0.17")    # m
W_w = mpf("16.35")   # N  (10 kg * 9.81 / 6)
theta = mpf(0)

num = 3 * (W_w / 1000) * cos(theta)
den = (3 - n) * (k_c + b_w * k_phi) * sqrt(d_w)
z_m = power(num / den, 2 / (2 * n + 1))
show("sinkage_dry_sand_flat_mm", z_m * 1000)

# same load, 15 degree incline (mean default-scenario slope)
z15 = power(3 * (W_w / 1000) * cos(radians(15)) / den, 2 / (2 * n + 1))
show("sinkage_dry_sand_15deg_mm", z15 * 1000)

# --- Geometric trafficability -------------------------------------------
# z_t = s / sqrt( ((r sqrt(s^2-h^2) + (h-r) h) / ((h-r) sqrt(s^2-h^2) - h r))^2 + 1 )
r = mpf(85)
h = mpf(170)
s = mpf(300)
root = sqrt(s * s - h * h)
ratio = (r * root + (h - r) * h) / ((h - r) * root - h * r)
z_t = s / sqrt(ratio * ratio + 1)
show("trafficability_s300_mm", z_t)

s2 = mpf(200)
root2 = sqrt(s2 * s2 - h * h)
ratio2 = (r * root2 + (h - r) * h) / ((h - r) * root2 - h * r)
show("trafficability_s200_mm", s2 / sqrt(ratio2 * ratio2 + 1))

# --- Required drawbar pull / per-wheel traction --------------------------
W = mpf("98.1")      # N (10 kg * 9.81)
abar = radians(15)
F_req = W * sin(abar) + mpf("0.05") * W * cos(abar)
show("drawbar_pull_15deg_N", F_req)
show("traction_per_wheel_15deg_N", F_req / 6)

# --- Motor power, T_i = 4 N each ------------------------------------------
R_m = mpf(1)
g_m = mpf(100)
K_t = mpf("0.01")
r_m = mpf("0.085")   # wheel radius in metres
P = (R_m * g_m**2 * r_m**2 / K_t**2) * 6 * mpf(4)**2
show("power_six_4N_wheels_W", P)

# --- Stability angles ------------------------------------------------------
show("atan_250_over_185_deg", degrees(atan(mpf(250) / 185)))
show("atan_100_over_185_deg", degrees(atan(mpf(100) / 185)))
