#!/usr/bin/env python3
"""Visual walk up the augmentation ladder, level 0 through 6.

    python3 demos/02_augmentation_ladder.py [--out DIR]

For each level this prints which transforms the level adds, then renders a
preview strip (eight augmented draws of the same synthetic image) to a PNG
under the output directory. Levels 5 and 6 also mix in a partner image, so
their strips show patches/blends from a second class.
"""

import argparse
from pathlib import Path

import numpy as np
from PIL import Image

from simreg import synth_sample
from simreg.augment import MAX_LEVEL, build_pipeline, preview_grid

DESCRIPTIONS = {
    0: "normalize only (the evaluation view)",
    1: "+ random resized crop",
    2: "+ horizontal flip (p = 0.5)",
    3: "+ randaugment (2 ops per draw, magnitude ~ N(9, 0.5) clipped to [0, 10])",
    4: "+ random erasing (p = 0.25, after normalization)",
    5: "+ mixup across the batch (levels past 4 swap the mixer, not the ops)",
    6: "+ cutmix replaces mixup (coin-flipped against it per batch)",
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).parent / "output" / "ladder",
        help="directory for the preview PNGs",
    )
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    rng = np.random.default_rng(2)
    image = synth_sample(rng, label=0, image_size=96)
    partner = synth_sample(rng, label=2, image_size=96)

    print("one source image, eight draws per level:")
    for level in range(MAX_LEVEL + 1):
        pipeline = build_pipeline(level)
        ops = [op.name for op in pipeline.ops]
        mixer = pipeline.mixer.__name__ if pipeline.mixer else None
        grid = preview_grid(
            image, level, np.random.default_rng(level), n=8,
            partner=partner if mixer else None,
        )
        path = args.out / f"level{level}.png"
        Image.fromarray(grid).save(path)
        print(f"\nlevel {level}: {DESCRIPTIONS[level]}")
        print(f"  pipeline: {ops or ['(none)']}" + (f" + mixer {mixer}" if mixer else ""))
        print(f"  preview:  {path}")

    print("\nlevels are cumulative: each keeps everything below it.")
    print("training at level L uses two independent draws of this pipeline per image.")


if __name__ == "__main__":
    main()
