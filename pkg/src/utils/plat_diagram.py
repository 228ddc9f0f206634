# src/utils/plat_diagram.py
"""
Four-strand plat model of a standard braid-form diagram.

Odd sections twist the middle strands (generator 2), even sections the top pair
(generator 1) with opposite handedness, giving sigma_2^{b1} sigma_1^{-b2} sigma_2^{b3} ...
Both ends are closed by caps joining positions (1, 2) and (3, 4). Only odd-length
tuples are modelled; callers normalize first.
"""
from typing import Dict, List, Sequence, Tuple

Crossing = Tuple[int, int]  # (generator, +1 / -1)

_CAP = {1: 2, 2: 1, 3: 4, 4: 3}


def braid_word(entries: Sequence[int]) -> List[Crossing]:
    if len(entries) % 2 == 0:
        raise ValueError("plat model needs an odd number of sections")
    word = []
    for section, b in enumerate(entries, start=1):
        generator, handedness = (2, 1) if section % 2 else (1, -1)
        sign = handedness if b > 0 else -handedness
        word.extend([(generator, sign)] * abs(b))
    return word


def _sweep(word: List[Crossing], position: int, direction: int,
           passes: Dict[int, List[int]]) -> int:
    order = range(len(word)) if direction > 0 else range(len(word) - 1, -1, -1)
    for index in order:
        generator = word[index][0]
        if position == generator:
            position = generator + 1
        elif position == generator + 1:
            position = generator
        else:
            continue
        passes.setdefault(index, []).append(direction)
    return position


def trace_components(word: List[Crossing]) -> List[Dict[int, List[int]]]:
    """Per component, the traversal directions (+1 rightward) recorded at each crossing"""
    components = []
    unvisited = {1, 2, 3, 4}
    while unvisited:
        start = min(unvisited)
        passes: Dict[int, List[int]] = {}
        left = start
        while True:
            unvisited.discard(left)
            right = _sweep(word, left, 1, passes)
            back = _sweep(word, _CAP[right], -1, passes)
            unvisited.discard(back)
            left = _CAP[back]
            if left == start:
                break
        components.append(passes)
    return components


def component_count(entries: Sequence[int]) -> int:
    return len(trace_components(braid_word(entries)))


def writhe(entries: Sequence[int]) -> int:
    """Sum of crossing signs; a crossing's sign is its handedness times both strand directions"""
    word = braid_word(entries)
    components = trace_components(word)
    if len(components) != 1:
        raise ValueError("writhe needs a single component")
    total = 0
    for index, directions in components[0].items():
        assert len(directions) == 2, f"crossing {index} traversed {len(directions)} times"
        total += word[index][1] * directions[0] * directions[1]
    return total
