"""Regenerate tests/data/lena512.pgm from the image shipped in the scipy 0.16.1 sdist.

Usage: python scripts/fetch_lena.py [output.pgm]
"""

import io
import pickle
import sys
import tarfile
import urllib.request
from pathlib import Path

import numpy as np

URL = (
    "https://files.pythonhosted.org/packages/7b/e1/"
    "ecc1820874c396a094e6df30d4d3aa8119d4987c5ff0b9caec73db362849/scipy-0.16.1.tar.gz"
)
MEMBER = "scipy-0.16.1/scipy/misc/lena.dat"


def main() -> None:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "tests/data/lena512.pgm"
    with urllib.request.urlopen(URL) as resp:
        archive = tarfile.open(fileobj=io.BytesIO(resp.read()), mode="r:gz")
    raw = archive.extractfile(MEMBER).read()
    img = np.asarray(pickle.loads(raw, encoding="latin1")).astype(np.uint8)
    assert img.shape == (512, 512), img.shape
    out.write_bytes(b"P5\n512 512\n255\n" + img.tobytes())
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
