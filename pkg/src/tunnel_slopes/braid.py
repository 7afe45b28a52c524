"""Words in the reduced braid group B = < dm, dl, s >.

The three generators satisfy (dm s)^2 = (dl s)^2 = 1 and
dm^-1 dl dm dl^-1 = s^2, so conjugation by s inverts dm and dl:

    dm^-1 = s dm s        dl^-1 = s dl s

A word is a sequence of letters, each a generator name ("m", "l" or "s")
with a nonzero integer exponent, adjacent letters having distinct names.
The text form is whitespace-separated name/exponent pairs, e.g.
"m -1 s -1 l 1 m -1 s 3 l -1".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DomainError, ParseError
from .exact_arith import INFINITY, ExtRational

__all__ = [
    "GENERATORS",
    "Letter",
    "BraidWord",
    "word",
    "parse_word",
    "format_word",
    "reverse_word",
    "winding_number",
    "double_coset_trim",
    "segment",
    "subgroup_slope",
    "subgroup_normal_form",
]

GENERATORS = ("m", "l", "s")

Letter = tuple[str, int]


@dataclass(frozen=True)
class BraidWord:
    """A canonical word: merged runs, no zero exponents."""

    letters: tuple[Letter, ...] = ()

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return word(self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __bool__(self) -> bool:
        return bool(self.letters)


def word(letters: Iterable[Letter]) -> BraidWord:
    """Build a canonical word, merging adjacent runs of the same generator.

    Cancellation cascades: m 1 s -2 s 2 m -1 collapses to the empty word.
    """
    stack: list[Letter] = []
    for name, exponent in letters:
        if name not in GENERATORS:
            raise DomainError(f"unknown generator {name!r}")
        if exponent == 0:
            continue
        while stack and stack[-1][0] == name:
            exponent += stack.pop()[1]
            if exponent == 0:
                if not stack:
                    break
                name, exponent = stack.pop()
        if exponent != 0:
            stack.append((name, exponent))
    return BraidWord(tuple(stack))


def parse_word(text: str) -> BraidWord:
    """Parse the text form of a word.

    >>> parse_word("m 2 s -1").letters
    (('m', 2), ('s', -1))
    """
    tokens = text.split()
    if len(tokens) % 2 != 0:
        raise ParseError(
            f"token {len(tokens)}: generator {tokens[-1]!r} has no exponent"
        )
    letters: list[Letter] = []
    for i in range(0, len(tokens), 2):
        name = tokens[i]
        if name not in GENERATORS:
            raise ParseError(f"token {i + 1}: expected one of m, l, s, got {name!r}")
        try:
            exponent = int(tokens[i + 1])
        except ValueError:
            raise ParseError(
                f"token {i + 2}: expected an integer exponent, got {tokens[i + 1]!r}"
            ) from None
        letters.append((name, exponent))
    return word(letters)


def format_word(w: BraidWord) -> str:
    """Text form of a word; the empty word formats as the empty string."""
    return " ".join(f"{name} {exponent}" for name, exponent in w.letters)


_SWAP = {"m": "l", "l": "m", "s": "s"}


def reverse_word(w: BraidWord) -> BraidWord:
    """Reverse the letter order and exchange dm with dl.

    This is the automorphism that exchanges the upper and lower tunnel data
    of the position the word describes.
    """
    return word((_SWAP[name], exponent) for name, exponent in reversed(w.letters))


def winding_number(w: BraidWord) -> int:
    """Total dl-exponent counted with a sign that flips at each odd s-block.

    A dl^e run contributes -e when the total s-exponent strictly before it is
    even and +e when it is odd; dm letters never contribute.

    >>> winding_number(parse_word("m 1 s 4 l -1"))
    1
    >>> winding_number(parse_word("m 1 l 1"))
    -1
    """
    total = 0
    s_parity = 1
    for name, exponent in w.letters:
        if name == "s":
            s_parity = s_parity if exponent % 2 == 0 else -s_parity
        elif name == "l":
            total -= s_parity * exponent
    return total


def double_coset_trim(w: BraidWord) -> BraidWord:
    """Strip the maximal <dl, s> prefix and the maximal <dm, s> suffix.

    Words equal up to those cosets describe the same position; a word that
    trims to nothing describes the trivial knot.
    """
    letters = list(w.letters)
    start = 0
    while start < len(letters) and letters[start][0] in ("l", "s"):
        start += 1
    end = len(letters)
    while end > start and letters[end - 1][0] in ("m", "s"):
        end -= 1
    return word(letters[start:end])


def _expand_negative_m(letters: Iterable[Letter]) -> BraidWord:
    """Rewrite each dm^-k (k > 0) as (s dm s)^k so dm appears only positively."""
    rewritten: list[Letter] = []
    for name, exponent in letters:
        if name == "m" and exponent < 0:
            k = -exponent
            rewritten.append(("s", 1))
            for _ in range(k - 1):
                rewritten.append(("m", 1))
                rewritten.append(("s", 2))
            rewritten.append(("m", 1))
            rewritten.append(("s", 1))
        else:
            rewritten.append((name, exponent))
    return word(rewritten)


def segment(w: BraidWord) -> Optional[list[BraidWord]]:
    """Split a word at its dm letters into subgroup segments.

    After trimming and rewriting dm to positive exponents, the word has the
    form dm s u_d dm s u_{d-1} ... dm s u_0 with each u_i in < dl, s >;
    the returned list holds the segments s^-1 u_i indexed from the right,
    so segment(w)[0] is the rightmost.  Returns None when the word trims to
    nothing (the trivial knot).
    """
    trimmed = double_coset_trim(w)
    if not trimmed:
        return None
    expanded = double_coset_trim(_expand_negative_m(trimmed.letters))
    assert expanded, "a nontrivial word stays nontrivial under rewriting"
    pieces: list[list[Letter]] = []
    for name, exponent in expanded.letters:
        if name == "m":
            assert exponent > 0
            for _ in range(exponent):
                pieces.append([])
        else:
            if not pieces:  # cannot happen after trimming
                raise DomainError("word does not start with dm after trimming")
            pieces[-1].append((name, exponent))
    return [word([("s", -1)] + piece) for piece in reversed(pieces)]


def subgroup_slope(u: BraidWord) -> ExtRational:
    """Slope of the disk obtained by pushing the primitive disk through u.

    u must lie in the subgroup < dl, s >.  The result is a rational with odd
    numerator, or INFINITY for the dl-axis (in particular for the empty word).

    >>> subgroup_slope(parse_word("s 3 l -1"))
    Fraction(7, 3)
    """
    a, b = 1, 0
    for name, exponent in u.letters:
        if name == "s":
            b += a * exponent
        elif name == "l":
            a -= 2 * exponent * b
        else:
            raise DomainError("word leaves the subgroup < dl, s >")
    assert a % 2 == 1
    if b == 0:
        return INFINITY
    return Fraction(a, b)


def subgroup_normal_form(u: BraidWord) -> BraidWord:
    """Normal form of a < dl, s > word under (dl s)^2 = 1.

    Writing x = dl s (an involution), every element is an alternating word
    in x and s-powers; spelling x back as dl s gives a canonical
    representative.

    >>> str(subgroup_normal_form(parse_word("s -1 l -1")))
    'l 1 s 1'
    """
    symbols: list[Letter] = []  # ("x", 1) or ("s", e) with e != 0

    def push_s(e: int) -> None:
        if e == 0:
            return
        if symbols and symbols[-1][0] == "s":
            e += symbols.pop()[1]
            if e == 0:
                return
        symbols.append(("s", e))

    def push_x() -> None:
        if symbols and symbols[-1][0] == "x":
            symbols.pop()
        else:
            symbols.append(("x", 1))

    for name, exponent in u.letters:
        if name == "s":
            push_s(exponent)
        elif name == "l":
            if exponent > 0:
                for _ in range(exponent):  # dl = x s^-1
                    push_x()
                    push_s(-1)
            else:
                for _ in range(-exponent):  # dl^-1 = s x
                    push_s(1)
                    push_x()
        else:
            raise DomainError("word leaves the subgroup < dl, s >")
    letters: list[Letter] = []
    for name, exponent in symbols:
        if name == "x":
            letters.append(("l", 1))
            letters.append(("s", 1))
        else:
            letters.append(("s", exponent))
    return word(letters)
