# src/engines/__init__.py
from typing import Callable, Dict, Iterable, Tuple

from ..config import CLOSED, ENGINE_NAMES, REDUCE, SKEIN, logger
from ..errors import EngineMismatchError, InputError
from ..laurent import LaurentPoly2
from .closedform import dubrovnik_closed
from .reduction import dubrovnik_reduce
from .skein import dubrovnik_skein

ENGINES: Dict[str, Callable[..., LaurentPoly2]] = {
    SKEIN: dubrovnik_skein,
    REDUCE: dubrovnik_reduce,
    CLOSED: dubrovnik_closed,
}


def evaluate(t, engine: str) -> LaurentPoly2:
    try:
        return ENGINES[engine](t)
    except KeyError:
        raise InputError(f"unknown engine {engine!r}, choose from {', '.join(ENGINE_NAMES)}") from None


def cross_check(t, engines: Iterable[str] = ENGINE_NAMES) -> Tuple[LaurentPoly2, Dict[str, LaurentPoly2]]:
    """Evaluate t on every engine; raises EngineMismatchError unless all results coincide"""
    results = {name: evaluate(t, name) for name in engines}
    distinct = set(results.values())
    if len(distinct) != 1:
        logger.error(f"❌ Engines disagree on {t}: {sorted(results)}")
        raise EngineMismatchError(f"engines disagree on {t}: " +
                                  "; ".join(f"{name}={value}" for name, value in results.items()))
    return distinct.pop(), results
