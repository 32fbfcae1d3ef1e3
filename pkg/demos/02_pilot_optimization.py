"""How many pilot symbols should a block carry?

For the separate-processing bound the answer depends on SNR: more
pilots sharpen the channel estimate but crowd out data.  For the
joint bounds the answer is always one pilot per block; extra pilots
only waste symbols, because joint processing keeps refining the
channel estimate from the data itself.  The continuous relaxation
tau* = log2(e)/C - 1/snr lands strictly inside (0, 1), which is why
the integer optimum pins to 1.
"""

from pilotbounds import (
    SnrValue,
    optimize_pilots_joint,
    separate_bound,
)

print("separate processing, T = 10: pilots worth buying at low SNR")
print(f"{'snr':>8s} {'tau*':>5s} {'I_S':>8s}")
for db in (-10.0, -5.0, 0.0, 5.0, 10.0, 20.0, 30.0):
    res = separate_bound(10, SnrValue.from_db(db))
    print(f"{db:+7.1f} {res.tau_star:5d} {res.value:8.4f}")

print()
print("joint processing, T = 10: one pilot, at every SNR")
print(f"{'snr':>8s} {'tau*':>5s} {'I_J1':>8s} {'continuous tau*':>16s}")
for db in (-10.0, -5.0, 0.0, 5.0, 10.0, 20.0, 30.0):
    res = optimize_pilots_joint(10, SnrValue.from_db(db))
    print(f"{db:+7.1f} {res.tau_star:5d} {res.value:8.4f} {res.tau_star_continuous:16.4f}")

print()
print("the same holds for the weaker closed-form variant")
for db in (0.0, 10.0):
    res = optimize_pilots_joint(10, SnrValue.from_db(db), which="j2")
    print(f"  j2, {db:+5.1f} dB: tau* = {res.tau_star}, value = {res.value:.4f}")
