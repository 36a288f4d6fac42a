"""가랜드 단어 {1,2}ⁿ 과 이중 단어 회전에 따른 동치류 세기."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from app.core.config import get_settings
from app.core.errors import GarlandWordError, InfeasibleSizeError
from app.core.logger import get_logger

logger = get_logger(__name__)

_ALPHABET = frozenset((1, 2))


@dataclass(frozen=True, slots=True)
class GarlandWord:
    """조각 번호의 나열. 1 과 2 만 허용합니다."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise GarlandWordError("빈 단어는 허용되지 않습니다.")
        invalid = set(self.letters) - _ALPHABET
        if invalid:
            raise GarlandWordError(f"단어에는 1 과 2 만 올 수 있습니다: {sorted(invalid)}")

    @classmethod
    def parse(cls, text: str) -> GarlandWord:
        """'121' 또는 '1,2,1' 꼴을 받습니다."""
        cleaned = text.replace(",", "").replace(" ", "")
        if not cleaned.isdigit():
            raise GarlandWordError(f"단어를 해석할 수 없습니다: {text!r}")
        return cls(tuple(int(char) for char in cleaned))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "".join(str(letter) for letter in self.letters)

    def mirror(self) -> GarlandWord:
        return GarlandWord(self.letters[::-1])

    def doubled(self) -> tuple[int, ...]:
        """(α, ᾱ)."""
        return self.letters + self.letters[::-1]

    @property
    def is_mixed(self) -> bool:
        return len(set(self.letters)) == 2


def mirror(word: GarlandWord) -> GarlandWord:
    return word.mirror()


def _rotations(sequence: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for shift in range(len(sequence)):
        yield sequence[shift:] + sequence[:shift]


def equivalent(first: GarlandWord, second: GarlandWord) -> bool:
    """(α, ᾱ) 가 (β, β̄) 의 순환 회전이면 같은 류입니다."""
    if len(first) != len(second):
        return False
    return second.doubled() in set(_rotations(first.doubled()))


def class_members(word: GarlandWord) -> list[GarlandWord]:
    """이중 단어의 회전 가운데 (β, β̄) 꼴인 것들의 β, 사전순."""
    n = len(word)
    members = {
        rotated[:n] for rotated in _rotations(word.doubled()) if rotated[n:] == rotated[:n][::-1]
    }
    return [GarlandWord(letters) for letters in sorted(members)]


def representative(word: GarlandWord) -> GarlandWord:
    return class_members(word)[0]


def capped_word(n: int) -> GarlandWord:
    """P₂ 조각 n 개 뒤에 P₁ 한 개로 막은 Lₙ."""
    if n < 1:
        raise GarlandWordError(f"n 은 1 이상이어야 합니다: {n}")
    return GarlandWord((2,) * n + (1,))


def _check_length(n: int) -> None:
    limit = get_settings().GARLAND_MAX_LENGTH
    if not 1 <= n <= limit:
        raise InfeasibleSizeError(f"단어 길이 {n} 은 전수 열거 범위 1..{limit} 밖입니다.")


def _divisors(value: int) -> list[int]:
    return [k for k in range(1, value + 1) if value % k == 0]


def _class_sizes(words: np.ndarray, n: int) -> np.ndarray:
    """비트 1 을 문자 2 로 읽은 단어들의 류 크기(1 또는 2).

    이중 단어의 최소 회전 주기가 짝수이면 α 와 짝이 되는 다른 단어가 하나 있고, 홀수이면 혼자입니다.
    """
    width = 2 * n
    mask = np.uint64((1 << width) - 1)
    reversed_words = np.zeros_like(words)
    for bit in range(n):
        reversed_words |= ((words >> np.uint64(bit)) & np.uint64(1)) << np.uint64(n - 1 - bit)
    doubled = (words << np.uint64(n)) | reversed_words
    period = np.zeros(words.shape, dtype=np.int64)
    for shift in _divisors(width):
        if shift == width:
            rotated = doubled
        else:
            rotated = ((doubled << np.uint64(shift)) | (doubled >> np.uint64(width - shift))) & mask
        fresh = (period == 0) & (rotated == doubled)
        period[fresh] = shift
    return np.where(period % 2 == 0, 2, 1)


def _popcount(words: np.ndarray, n: int) -> np.ndarray:
    counts = np.zeros(words.shape, dtype=np.int64)
    for bit in range(n):
        counts += ((words >> np.uint64(bit)) & np.uint64(1)).astype(np.int64)
    return counts


def classes_by_letter_count(n: int) -> list[int]:
    """문자 2 가 k 번 나오는 길이 n 단어들의 류 개수, k = 0..n."""
    _check_length(n)
    chunk = get_settings().GARLAND_CHUNK_SIZE
    singles = np.zeros(n + 1, dtype=np.int64)
    pairs = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, chunk):
        words = np.arange(start, min(total, start + chunk), dtype=np.uint64)
        sizes = _class_sizes(words, n)
        twos = _popcount(words, n)
        singles += np.bincount(twos[sizes == 1], minlength=n + 1)
        pairs += np.bincount(twos[sizes == 2], minlength=n + 1)
        logger.debug("garland chunk n=%d start=%d size=%d", n, start, len(words))
    return [int(single) + int(pair) // 2 for single, pair in zip(singles, pairs, strict=True)]


def count_classes(n: int) -> int:
    """{1,2}ⁿ 을 equivalent 로 나눈 류의 개수."""
    counts = classes_by_letter_count(n)
    logger.info("count_classes n=%d classes=%d", n, sum(counts))
    return sum(counts)


def expected_class_count(n: int) -> int:
    """(2ⁿ + 2^((q+1)/2)) / 2, q 는 n 의 홀수 부분."""
    if n < 1:
        raise GarlandWordError(f"n 은 1 이상이어야 합니다: {n}")
    odd = n
    while odd % 2 == 0:
        odd //= 2
    return ((1 << n) + (1 << ((odd + 1) // 2))) // 2


def lower_bounds(n: int) -> tuple[Fraction, Fraction]:
    """(2ⁿ/(2n), 2ⁿ/n)."""
    return Fraction(1 << n, 2 * n), Fraction(1 << n, n)


def census(n: int) -> list[list[GarlandWord]]:
    """길이 n 의 모든 류를 대표원 순으로 나열합니다."""
    _check_length(n)
    seen: set[tuple[int, ...]] = set()
    classes = []
    for bits in range(1 << n):
        letters = tuple(2 if bits >> (n - 1 - i) & 1 else 1 for i in range(n))
        if letters in seen:
            continue
        members = class_members(GarlandWord(letters))
        seen.update(member.letters for member in members)
        classes.append(members)
    return sorted(classes, key=lambda members: members[0].letters)


def count_by_volume(budget: Fraction, volumes: Sequence[Fraction]) -> int:
    """조각 부피 합이 budget 이하인 단어들의 류 개수. 류는 문자 개수를 보존합니다."""
    budget = Fraction(budget)
    first, second = (Fraction(volume) for volume in volumes)
    if first <= 0 or second <= 0:
        raise GarlandWordError("조각 부피는 양수여야 합니다.")
    longest = int(budget // min(first, second))
    if longest > get_settings().GARLAND_MAX_LENGTH:
        raise InfeasibleSizeError(f"부피 {budget} 는 길이 {longest} 까지의 열거가 필요합니다.")
    total = 0
    for n in range(1, longest + 1):
        for twos, classes in enumerate(classes_by_letter_count(n)):
            if (n - twos) * first + twos * second <= budget:
                total += classes
    logger.info("count_by_volume budget=%s volumes=%s,%s classes=%d", budget, first, second, total)
    return total
