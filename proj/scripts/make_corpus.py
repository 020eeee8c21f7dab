#!/usr/bin/env python3
"""Regenerates the bundled benchmark corpus under corpus/.

The corpus is photographic natural scenes (the recovery methods' target
domain): scikit-image's bundled sample photographs plus matplotlib's sample
portrait, with a few distinct-region crops of the larger scenes to clear 20
images. Scientific imagery (microscopy, astronomy, medical) is out of scope
— near-uniform backgrounds make per-block DC bounds uninformative, which is
a different regime from the photographs the methods target.

Color images are converted to luma; everything is cropped to dimensions
that are multiples of 8 and at least 176 pixels per axis (the MS-SSIM
minimum), capped at 512 pixels per side, and written as binary PGM (P5).
Deterministic: no downloads, no randomness.
"""

import os
import sys

import numpy as np

try:
    from skimage import data as skdata
    from skimage.color import rgb2gray
except ImportError:
    sys.exit("scikit-image is required to regenerate the corpus")

OUT_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")
MIN_SIDE = 176  # MS-SSIM needs >= 176 pixels per axis
MAX_SIDE = 512  # keep benchmark wall time sane
BLOCK = 8


def to_gray_u8(img):
    arr = np.asarray(img)
    if arr.ndim == 3:
        arr = rgb2gray(arr)  # float in [0, 1]
        arr = np.round(arr * 255.0)
    arr = arr.astype(np.float64)
    if arr.max() > 255:  # 16-bit sources
        arr = np.round(arr / arr.max() * 255.0)
    return np.clip(arr, 0, 255).astype(np.uint8)


def center_crop(arr):
    h, w = arr.shape
    ch = min((h // BLOCK) * BLOCK, MAX_SIDE)
    cw = min((w // BLOCK) * BLOCK, MAX_SIDE)
    if ch < MIN_SIDE or cw < MIN_SIDE:
        return None
    y0, x0 = (h - ch) // 2, (w - cw) // 2
    return arr[y0:y0 + ch, x0:x0 + cw]


def save_pgm(path, arr):
    h, w = arr.shape
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (w, h))
        f.write(arr.tobytes())


def main():
    os.makedirs(OUT_DIR, exist_ok=True)

    scenes = {}

    def add(name, loader):
        try:
            scenes[name] = to_gray_u8(loader())
        except Exception as e:  # a dataset missing from this install is fine
            print(f"skipping {name}: {e}", file=sys.stderr)

    add("astronaut", skdata.astronaut)
    add("brick", skdata.brick)
    add("camera", skdata.camera)
    add("cat", skdata.cat)
    add("chelsea", skdata.chelsea)
    add("clock", skdata.clock)
    add("coffee", skdata.coffee)
    add("coins", skdata.coins)
    add("grass", skdata.grass)
    add("gravel", skdata.gravel)
    add("motorcycle_left", lambda: skdata.stereo_motorcycle()[0])
    add("motorcycle_right", lambda: skdata.stereo_motorcycle()[1])
    add("page", skdata.page)
    add("rocket", skdata.rocket)

    try:
        import matplotlib.cbook as cbook
        from PIL import Image

        with cbook.get_sample_data("grace_hopper.jpg") as f:
            scenes["portrait"] = to_gray_u8(np.asarray(Image.open(f)))
    except Exception as e:
        print(f"skipping portrait: {e}", file=sys.stderr)

    # Distinct-region crops of the larger scenes: different subject matter
    # from the same photograph, to bring the corpus over 20 images.
    crops = []

    def crop(scene, name, y0, x0, side=256):
        if scene in scenes:
            arr = scenes[scene]
            if y0 + side <= arr.shape[0] and x0 + side <= arr.shape[1]:
                crops.append((name, arr[y0:y0 + side, x0:x0 + side]))

    crop("astronaut", "astronaut_face", 0, 128)
    crop("astronaut", "astronaut_shuttle", 0, 256)
    crop("camera", "camera_tripod", 256, 256)
    crop("coffee", "coffee_cup", 100, 200)
    crop("grass", "grass_detail", 128, 128)
    crop("gravel", "gravel_detail", 128, 128)
    crop("portrait", "portrait_face", 64, 128)

    written = []
    for name in sorted(scenes):
        arr = center_crop(scenes[name])
        if arr is None:
            print(f"skipping {name}: too small after cropping", file=sys.stderr)
            continue
        save_pgm(os.path.join(OUT_DIR, f"{name}.pgm"), arr)
        written.append((name, arr.shape))
    for name, arr in crops:
        save_pgm(os.path.join(OUT_DIR, f"{name}.pgm"), arr)
        written.append((name, arr.shape))

    for name, shape in sorted(written):
        print(f"{name}.pgm {shape[1]}x{shape[0]}")
    print(f"total {len(written)} images")
    if len(written) < 20:
        sys.exit("corpus has fewer than 20 images")


if __name__ == "__main__":
    main()
