"""Symbol-sequence rewriting over a conjugate-extended alphabet.

A degree-m polynomial leads to a 2m x 2m integer matrix; its columns define
one replacement rule per letter of a 4m-letter alphabet.  Letters 0..2m-1 are
the base symbols, letter k+2m is the conjugate of letter k, written "k~".  A
base symbol and its conjugate cancel without changing net counts, which is how
negative matrix entries are represented with nothing but symbols.

Rewriting a word applies the rule to every letter and concatenates the
images, so the vector of net symbol counts evolves exactly as multiplication
by the source matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import RealBlockMatrix

CountVector = tuple[int, ...]


class CapExceeded(RuntimeError):
    """Rewriting stopped early; carries the completed word prefix."""

    def __init__(self, words: list["Word"], next_length: int, cap: int):
        super().__init__(
            f"next word would have {next_length} symbols, over the cap of {cap}"
        )
        self.words = words
        self.next_length = next_length


def conjugate_symbol(s: int, m: int) -> int:
    """Conjugate partner: indices pair up as (k, k+2m) mod 4m."""
    return (s + 2 * m) % (4 * m)


@dataclass(frozen=True, slots=True)
class Word:
    """Finite symbol sequence over the 4m-letter alphabet of a degree-m system."""

    m: int
    symbols: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.symbols)

    def conjugate(self) -> "Word":
        off = 2 * self.m
        size = 4 * self.m
        return Word(self.m, tuple((s + off) % size for s in self.symbols))

    def display(self) -> str:
        """Base symbols print as their index, conjugates with a "~" suffix."""
        off = 2 * self.m
        return "".join(
            str(s) if s < off else f"{s - off}~" for s in self.symbols
        )

    def __str__(self) -> str:
        return self.display()


@dataclass(frozen=True, slots=True)
class RuleTable:
    """Replacement image for each of the 4m symbols; conjugate symbols carry
    the symbol-wise conjugate of their partner's image."""

    m: int
    images: tuple[Word, ...]

    def display_lines(self) -> list[str]:
        off = 2 * self.m
        lines = []
        for s, image in enumerate(self.images):
            name = str(s) if s < off else f"{s - off}~"
            lines.append(f"{name} -> {image.display()}")
        return lines


def derive_rules(matrix: RealBlockMatrix) -> RuleTable:
    """Read one rule per base symbol off the matrix columns.

    Column j, scanned top to bottom, contributes symbol i repeated e times for
    a positive entry e and the conjugate of i repeated |e| times for a negative
    entry.  Conjugate symbols get the conjugated image.
    """
    m = matrix.m
    size = 2 * m
    base_images = []
    for j in range(size):
        symbols: list[int] = []
        for i in range(size):
            e = matrix.entries[i][j]
            if e > 0:
                symbols.extend([i] * e)
            elif e < 0:
                symbols.extend([i + size] * (-e))
        base_images.append(Word(m, tuple(symbols)))
    images = tuple(base_images) + tuple(w.conjugate() for w in base_images)
    return RuleTable(m, images)


def rewrite_word(rules: RuleTable, w: Word) -> Word:
    """Replace every symbol by its image, preserving order."""
    out: list[int] = []
    images = rules.images
    for s in w.symbols:
        out.extend(images[s].symbols)
    return Word(w.m, tuple(out))


def cancel_conjugates(w: Word) -> Word:
    """Delete matched conjugate pairs, earliest occurrences first.

    Net counts are unchanged and no surviving base index retains both a symbol
    and its conjugate.
    """
    size = 4 * w.m
    off = 2 * w.m
    occur = [0] * size
    for s in w.symbols:
        occur[s] += 1
    budget = [0] * size
    for k in range(off):
        pairs = min(occur[k], occur[k + off])
        budget[k] = budget[k + off] = pairs
    out = []
    for s in w.symbols:
        if budget[s] > 0:
            budget[s] -= 1
        else:
            out.append(s)
    return Word(w.m, tuple(out))


def count(w: Word) -> CountVector:
    """Net symbol counts: entry k is (occurrences of k) - (occurrences of k~)."""
    size = 4 * w.m
    off = 2 * w.m
    occur = [0] * size
    for s in w.symbols:
        occur[s] += 1
    return tuple(occur[k] - occur[k + off] for k in range(off))


def word_from_counts(counts: CountVector, m: int) -> Word:
    """A shortest word with the given net counts (used to seed iterations)."""
    off = 2 * m
    symbols: list[int] = []
    for k, n in enumerate(counts):
        if n > 0:
            symbols.extend([k] * n)
        elif n < 0:
            symbols.extend([k + off] * (-n))
    return Word(m, tuple(symbols))


def iterate_words(
    rules: RuleTable, w0: Word, k: int, length_cap: int = 1_000_000
) -> list[Word]:
    """Words w0 through R^k(w0), raw (no cancellation between generations).

    Raises CapExceeded, carrying the completed prefix, if the next word would
    exceed length_cap symbols.
    """
    words = [w0]
    current = w0
    for _ in range(k):
        next_length = sum(len(rules.images[s]) for s in current.symbols)
        if next_length > length_cap:
            raise CapExceeded(words, next_length, length_cap)
        current = rewrite_word(rules, current)
        words.append(current)
    return words
