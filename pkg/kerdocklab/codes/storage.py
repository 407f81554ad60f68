#!/usr/bin/env python3

""" Reading and writing codes in the binary ``KCDK`` format.

Layout (all integers little endian)::

    magic    4 bytes   b"KCDK"
    version  1 byte    1
    n_bits   2 bytes   code length
    count    8 bytes   number of records
    payload  count * ceil(n/8) bytes, coordinate i at byte i >> 3,
             bit i & 7; bits beyond n are zero, records strictly
             increasing, nothing after the last record
"""

# std
from pathlib import Path, PurePath
from typing import Union

# 3rd party
import numpy as np

# ours
from kerdocklab.codes import bitops
from kerdocklab.codes.code import MAX_LENGTH, Code
from kerdocklab.codes.operators import as_linear, is_linear
from kerdocklab.errors import (
    BadLengthError,
    BadMagicError,
    OrderViolationError,
    PaddingError,
    TrailingDataError,
    TruncatedFileError,
    VersionMismatchError,
)
from kerdocklab.util.cli import handle_overwrite
from kerdocklab.util.log import get_logger

MAGIC = b"KCDK"
VERSION = 1

HEADER_DTYPE = np.dtype(
    [("magic", "S4"), ("version", "u1"), ("n_bits", "<u2"), ("count", "<u8")]
)

logger = get_logger("storage")


def encode_code(code: Code) -> bytes:
    header = np.zeros(1, dtype=HEADER_DTYPE)
    header["magic"] = MAGIC
    header["version"] = VERSION
    header["n_bits"] = code.n
    header["count"] = code.size
    payload = np.ascontiguousarray(bitops.to_bytes(code.words, code.n))
    return header.tobytes() + payload.tobytes()


def decode_code(data: bytes, **kwargs) -> Code:
    """ Parse the file contents.

    Raises:
        BadMagicError, VersionMismatchError, BadLengthError,
        TruncatedFileError, TrailingDataError, PaddingError,
        OrderViolationError
    """
    if len(data) < len(MAGIC) or data[: len(MAGIC)] != MAGIC:
        raise BadMagicError("Not a code file (bad magic).")
    if len(data) < HEADER_DTYPE.itemsize:
        raise TruncatedFileError("Code file header is truncated.")
    header = np.frombuffer(data[: HEADER_DTYPE.itemsize], dtype=HEADER_DTYPE)[0]
    if int(header["version"]) != VERSION:
        raise VersionMismatchError(
            "Code file version {} is not supported (expected {}).".format(
                int(header["version"]), VERSION
            )
        )
    n = int(header["n_bits"])
    if not 0 < n <= MAX_LENGTH:
        raise BadLengthError(
            "Code length {} is outside of [1, {}].".format(n, MAX_LENGTH)
        )
    count = int(header["count"])
    record = bitops.n_bytes(n)
    payload = data[HEADER_DTYPE.itemsize :]
    if len(payload) < count * record:
        raise TruncatedFileError(
            "Expected {} payload bytes, found {}.".format(
                count * record, len(payload)
            )
        )
    if len(payload) > count * record:
        raise TrailingDataError(
            "{} bytes after the last of {} records.".format(
                len(payload) - count * record, count
            )
        )
    records = np.frombuffer(payload, dtype=np.uint8).reshape(count, record)
    if n % 8:
        padding = (0xFF << (n % 8)) & 0xFF
        bad = np.nonzero(records[:, -1] & padding)[0]
        if len(bad):
            raise PaddingError(
                "Record {} has bits set beyond coordinate {}.".format(
                    int(bad[0]), n - 1
                )
            )
    words = bitops.from_bytes(records, n)
    increasing, bad_row = bitops.is_strictly_increasing(words)
    if not increasing:
        raise OrderViolationError(
            "Record {} is not larger than its predecessor.".format(bad_row)
        )
    return Code(words, n=n, canonical=True, **kwargs)


def write_code(
    code: Code, path: Union[str, PurePath], overwrite: str = "raise"
) -> bool:
    """ Write code to file.

    Args:
        code: Code
        path: Output path
        overwrite: How to proceed if the file exists: 'overwrite' or
            'raise'

    Returns:
        True if the file was written.
    """
    path = Path(path)
    handle_overwrite([path], overwrite, logger)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_code(code))
    logger.info("Wrote {} to {}.".format(code, path))
    return True


def read_code(
    path: Union[str, PurePath], detect_linear: bool = True, **kwargs
) -> Code:
    """ Read code from file.

    Args:
        path: Input path
        detect_linear: Flag the code as linear if it is closed under
            addition (the file format doesn't store this)
        **kwargs: Passed on to :class:`~kerdocklab.codes.Code`, e.g.
            ``family``

    Returns:
        Code
    """
    path = Path(path)
    code = decode_code(path.read_bytes(), **kwargs)
    if detect_linear and not code.linear and is_linear(code):
        code = as_linear(code)
    logger.debug("Read {} from {}.".format(code, path))
    return code
