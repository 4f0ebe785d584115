"""Reading and writing arrays, tree files and paren encodings."""

from pathlib import Path

import numpy as np

from . import reference
from .bintree import SuccinctBinaryTree
from .errors import MalformedEncodingError
from .reference import Variant

ENCODINGS = ("bp", "zaks", "dfuds")


def read_array(path):
    """Integers from ``path``: little-endian int64 for ``.i64``, else text.

    Text files hold one decimal integer per line; blank lines are skipped.
    """
    path = Path(path)
    if path.suffix == ".i64":
        raw = path.read_bytes()
        if len(raw) % 8:
            raise MalformedEncodingError(f"{path}: size {len(raw)} is not a multiple of 8")
        return np.frombuffer(raw, dtype="<i8").astype(np.int64)
    vals = []
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if not s:
                continue
            try:
                vals.append(int(s))
            except ValueError:
                raise MalformedEncodingError(f"{path}:{lineno}: not an integer: {s!r}") from None
    try:
        return np.array(vals, dtype=np.int64)
    except OverflowError:
        raise MalformedEncodingError(f"{path}: value outside 64-bit range") from None


def write_array(path, values):
    path = Path(path)
    arr = np.asarray(values, dtype=np.int64)
    if path.suffix == ".i64":
        path.write_bytes(arr.astype("<i8").tobytes())
    else:
        path.write_text("".join(f"{v}\n" for v in arr.tolist()), encoding="ascii")


def read_tree(path):
    return SuccinctBinaryTree.from_bytes(Path(path).read_bytes())


def write_tree(path, tree):
    Path(path).write_bytes(tree.to_bytes())


def decode(text, fmt, variant=Variant.T1):
    """Binary tree described by an encoding string.

    ``bp`` and ``dfuds`` describe the tree after transformation ``variant``;
    ``zaks`` needs no variant.
    """
    text = "".join(text.split())
    if fmt == "zaks":
        return reference.decode_zaks(text)
    if fmt == "bp":
        return reference.inverse_transform(variant, reference.decode_bp(text))
    if fmt == "dfuds":
        return reference.inverse_transform(variant, reference.decode_dfuds(text))
    raise ValueError(f"unknown encoding {fmt!r}")


def encode(t, fmt, variant=Variant.T1):
    if fmt == "zaks":
        return reference.zaks(t)
    o, _ = reference.transform(variant, t)
    if fmt == "bp":
        return reference.encode_bp(o)
    if fmt == "dfuds":
        return reference.encode_dfuds(o)
    raise ValueError(f"unknown encoding {fmt!r}")


def convert(text, src, dst, src_variant=Variant.T1, dst_variant=None):
    """Re-encode a binary tree from one format (and variant) to another."""
    if dst_variant is None:
        dst_variant = src_variant
    return encode(decode(text, src, src_variant), dst, dst_variant)
