"""가랜드 단어와 동치류 세기 테스트."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.config import get_settings
from app.core.errors import GarlandWordError, InfeasibleSizeError
from app.garland.words import (
    GarlandWord,
    capped_word,
    census,
    class_members,
    classes_by_letter_count,
    count_by_volume,
    count_classes,
    equivalent,
    expected_class_count,
    lower_bounds,
    representative,
)

words = st.lists(st.sampled_from([1, 2]), min_size=1, max_size=12).map(lambda letters: GarlandWord(tuple(letters)))


def _brute_force_count(n: int) -> int:
    canonical = set()
    for letters in itertools.product((1, 2), repeat=n):
        doubled = letters + letters[::-1]
        canonical.add(min(doubled[shift:] + doubled[:shift] for shift in range(2 * n)))
    return len(canonical)


@pytest.mark.parametrize("n", range(1, 13))
def test_count_matches_brute_force_rotation_oracle(n: int) -> None:
    assert count_classes(n) == _brute_force_count(n)


@pytest.mark.parametrize("n", range(1, 17))
def test_count_matches_closed_form(n: int) -> None:
    assert count_classes(n) == expected_class_count(n)


@pytest.mark.parametrize(("n", "expected"), [(1, 2), (2, 3), (3, 6), (4, 9), (10, 516)])
def test_known_class_counts(n: int, expected: int) -> None:
    assert count_classes(n) == expected


@pytest.mark.parametrize("n", [4, 9, 16])
def test_count_exceeds_lower_bound(n: int) -> None:
    low, high = lower_bounds(n)

    assert low < high
    assert count_classes(n) >= low


def test_small_chunks_give_same_counts(monkeypatch: pytest.MonkeyPatch) -> None:
    expected = classes_by_letter_count(12)
    monkeypatch.setenv("GARLAND_CHUNK_SIZE", "1024")
    get_settings.cache_clear()

    assert classes_by_letter_count(12) == expected
    assert sum(expected) == expected_class_count(12)


@given(words)
def test_word_is_equivalent_to_its_mirror(word: GarlandWord) -> None:
    assert equivalent(word, word.mirror())


@given(words)
def test_classes_have_one_or_two_members(word: GarlandWord) -> None:
    members = class_members(word)

    assert 1 <= len(members) <= 2
    assert word in members
    assert all(equivalent(word, member) for member in members)
    assert representative(word) == members[0]


def test_equivalent_words() -> None:
    assert equivalent(GarlandWord.parse("12"), GarlandWord.parse("21"))
    assert equivalent(GarlandWord.parse("112"), GarlandWord.parse("211"))
    assert not equivalent(GarlandWord.parse("112"), GarlandWord.parse("121"))
    assert not equivalent(GarlandWord.parse("1"), GarlandWord.parse("11"))


@pytest.mark.parametrize("n", range(1, 9))
def test_census_partitions_all_words(n: int) -> None:
    classes = census(n)

    assert len(classes) == count_classes(n)
    flattened = [member.letters for members in classes for member in members]
    assert sorted(flattened) == sorted(itertools.product((1, 2), repeat=n))


def test_census_is_ordered_by_representative() -> None:
    assert [[str(word) for word in members] for members in census(2)] == [["11"], ["12", "21"], ["22"]]


def test_parse_and_capped_word() -> None:
    assert GarlandWord.parse("1,2,1") == GarlandWord.parse("121")
    assert str(capped_word(3)) == "2221"
    assert GarlandWord.parse("122").is_mixed
    assert not GarlandWord.parse("222").is_mixed


@pytest.mark.parametrize("text", ["", "13", "1a2", "0"])
def test_invalid_words_are_rejected(text: str) -> None:
    with pytest.raises(GarlandWordError):
        GarlandWord.parse(text)


def test_capped_word_requires_positive_length() -> None:
    with pytest.raises(GarlandWordError):
        capped_word(0)


def test_count_by_volume_respects_letter_counts() -> None:
    assert count_by_volume(Fraction(3), [Fraction(1), Fraction(1)]) == 2 + 3 + 6
    assert count_by_volume(Fraction(2), [Fraction(1), Fraction(2)]) == 3
    assert count_by_volume(Fraction(1, 2), [Fraction(1), Fraction(1)]) == 0


def test_count_by_volume_rejects_non_positive_volume() -> None:
    with pytest.raises(GarlandWordError):
        count_by_volume(Fraction(3), [Fraction(1), Fraction(0)])


def test_enumeration_limit_is_configurable(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("GARLAND_MAX_LENGTH", "4")

    assert count_classes(4) == 9
    with pytest.raises(InfeasibleSizeError):
        count_classes(5)
    with pytest.raises(InfeasibleSizeError):
        census(5)
    with pytest.raises(InfeasibleSizeError):
        count_by_volume(Fraction(10), [Fraction(1), Fraction(1)])
