#!/usr/bin/env python3
"""Tour of the loss pieces and the schedules that steer them.

Run with no arguments:

    python3 demos/01_losses_and_schedules.py

Walks through (1) the geometry of the similarity penalty, (2) how the
penalty and cross-entropy blend under gamma, and (3) the gamma and
learning-rate schedules used during training, printed as small tables.
"""

import numpy as np
import torch

from simreg import GammaSchedule, LossBreakdown, LrSchedule, combine_losses, similarity_penalty


def section(title: str) -> None:
    print()
    print(f"== {title} ==")


def bar(value: float, scale: float, width: int = 40) -> str:
    return "#" * int(round(width * value / scale))


def main() -> None:
    section("similarity penalty: 2 - 2*cos(prediction, target)")
    e0 = torch.tensor([1.0, 0.0, 0.0, 0.0])
    e1 = torch.tensor([0.0, 1.0, 0.0, 0.0])
    print("the penalty only sees directions, never magnitudes:")
    for name, a, b in [
        ("parallel      ", e0, e0),
        ("orthogonal    ", e0, e1),
        ("anti-parallel ", e0, -e0),
    ]:
        print(f"  {name} -> {similarity_penalty(a, b).item():.1f}")
    rng = np.random.default_rng(0)
    a = torch.from_numpy(rng.standard_normal(128))
    b = torch.from_numpy(rng.standard_normal(128))
    print(f"  random 128-dim pair            -> {similarity_penalty(a, b).item():.4f}")
    print(f"  same pair, one side scaled x16 -> {similarity_penalty(16 * a, b).item():.4f}")
    print("range is [0, 4]; 2 means 'no alignment at all'.")

    section("blending: total = (1 - gamma) * CE + gamma * SR")
    ce, sr = 1.10, 0.35
    print(f"fixed example losses: CE = {ce}, SR = {sr}")
    print("  gamma   total   (CE share / SR share)")
    for gamma in (0.0, 0.25, 0.5, 0.75, 1.0):
        blend: LossBreakdown = combine_losses(torch.tensor(ce), torch.tensor(sr), gamma)
        print(
            f"  {gamma:5.2f}   {blend.total:.4f}  "
            f"({(1 - gamma) * ce:.4f} / {gamma * sr:.4f})"
        )
    print("gamma = 0 ignores the penalty entirely; gamma = 1 ignores the labels.")

    section("gamma over training (10,000 iterations)")
    n = 10_000
    schedules = {
        "constant": GammaSchedule("constant", 0.5, 0.01, n),
        "linear  ": GammaSchedule("linear", 1.0, 0.01, n),
        "cosine  ": GammaSchedule("cosine", 1.0, 0.01, n),
    }
    fractions = [0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0]
    print("  strategy  " + "".join(f"{f:>8.0%}" for f in fractions))
    for name, sched in schedules.items():
        row = "".join(f"{sched.gamma_at(int(f * n)):8.3f}" for f in fractions)
        print(f"  {name}  {row}")
    print("decay strategies start label-free (gamma = 1) and hand over to CE.")

    section("learning rate: linear warmup, then cosine decay")
    lr = LrSchedule()  # 5e-7 -> 5e-4 over 5 epochs, back to 5e-7 by epoch 50
    print("  epoch      lr")
    for epoch in [0, 1, 2.5, 5, 10, 20, 30, 40, 50]:
        value = lr.lr_at(float(epoch))
        print(f"  {epoch:5.1f}  {value:.2e}  {bar(value, lr.lr_peak)}")


if __name__ == "__main__":
    main()
