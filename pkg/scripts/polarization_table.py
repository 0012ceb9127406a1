"""Compare the leading-order polarization with the isotropic quadrature model.

Prints n from both models and the fitted coefficient (1 - n) / ((w/m)^2 tanh^2(xi/2))
for a grid of packet widths and boost rapidities.
"""

import math

from lorentz_entanglement.kinematics import (
    WavePacket,
    polarization_leading_order,
    polarization_quadrature,
)

RATIOS = (0.01, 0.05, 0.1, 0.2)
XIS = (0.5, 1.0, 2.0, 4.0)


def main():
    print(f"{'w/m':>6} {'xi':>5} {'n closed':>14} {'n quadrature':>14} {'coef closed':>12} {'coef quad':>10}")
    for ratio in RATIOS:
        wp = WavePacket(w=ratio, m=1.0)
        for xi in XIS:
            closed = polarization_leading_order(wp, xi)
            quad = polarization_quadrature(wp, xi)
            scale = ratio**2 * math.tanh(xi / 2) ** 2
            print(
                f"{ratio:6.2f} {xi:5.1f} {closed:14.10f} {quad:14.10f} "
                f"{(1 - closed) / scale:12.6f} {(1 - quad) / scale:10.6f}"
            )


if __name__ == "__main__":
    main()
