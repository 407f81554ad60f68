#!/usr/bin/env python3

""" Exceptions raised by kerdocklab. All of them derive from
:class:`KerdockLabError`, so that callers (e.g. the command line interface)
can tell library errors apart from programming errors. """


class KerdockLabError(Exception):
    """ Base class of all kerdocklab exceptions. """


class UnsupportedParameterError(KerdockLabError, ValueError):
    """ Parameter outside of the supported range (e.g. m too large, odd m
    for a Kerdock code, invalid Gold exponent). """


class ConstructionError(KerdockLabError):
    """ A construction failed its own consistency checks. This signals an
    implementation bug or a degenerate parameter choice. """


class LengthMismatchError(KerdockLabError, ValueError):
    """ Word and code (or two codes) have different lengths. """


class CoordinateError(KerdockLabError, IndexError):
    """ Coordinate index out of range. """


class SizeCapError(KerdockLabError):
    """ The requested exhaustive computation exceeds the configured cap. """


class NotLinearError(KerdockLabError, ValueError):
    """ A code was required to be linear but isn't closed under addition. """


# Storage


class CodeFileError(KerdockLabError):
    """ Malformed code file. """


class BadMagicError(CodeFileError):
    pass


class VersionMismatchError(CodeFileError):
    pass


class TruncatedFileError(CodeFileError):
    pass


class OrderViolationError(CodeFileError):
    """ Records are not strictly increasing. """


class BadLengthError(CodeFileError):
    """ Code length in the header is outside of [1, 1024]. """


class PaddingError(CodeFileError):
    """ A record has bits set beyond the code length. """


class TrailingDataError(CodeFileError):
    """ Bytes left over after the last record. """


# Design analysis


class MixedWeightError(KerdockLabError, ValueError):
    """ Blocks of a design must all have the same weight. """


class NotADesignError(KerdockLabError):
    pass


class InconsistentSizeError(KerdockLabError, ValueError):
    """ Weight distribution does not sum up to the given code size. """


class NonIntegralError(KerdockLabError, ArithmeticError):
    pass


# Scheme analysis


class ExtensionPreconditionError(KerdockLabError):
    """ Distance set of C and its complement-shifted image overlap, so the
    relations of the extended code can't be attributed from distances
    alone. """


# Components


class EmptyFlipSetError(KerdockLabError):
    """ No minimum weight word has a one in the requested coordinate. """


class ComponentCountError(KerdockLabError):
    pass


class PatternNotFoundError(KerdockLabError):
    pass
