"""Few-walk approximants of the Motzkin ground state near t = 0 and t = infinity."""

import logging
from fractions import Fraction
from typing import Any, Optional, Set, Union

from ..config import RuntimeLimits
from ..exceptions import ModelMismatchError
from ..schemas import ChainModel, TruncationWindow
from ..states import GroundState, build_ground_state, fidelity, interior_area
from ..utils import log_method_call


def window_areas(n: int, window: TruncationWindow) -> Set[int]:
    """
    Areas kept by a window: the flat walk and single peaks for small t, the
    rainbow and its one-flat-pair neighbours for large t.
    """
    window = TruncationWindow(window)
    if window == TruncationWindow.small_t:
        return {0, 1}
    return {n * n, n * n - 1}


def _exact_motzkin(n, j, model, t, mode, limits) -> GroundState:
    model = ChainModel(model)
    if model != ChainModel.motzkin:
        raise ModelMismatchError(
            f"truncated approximants are defined for the Motzkin chain, got {model.value}"
        )
    return build_ground_state(n, j, model, t, mode=mode, limits=limits)


def _restrict(exact: GroundState, window: TruncationWindow) -> GroundState:
    kept = window_areas(exact.n, window)
    truncated = exact.restrict(lambda w: interior_area(w) in kept)
    logging.debug(
        f"{TruncationWindow(window).value} window keeps {len(truncated)} of "
        f"{len(exact)} walks"
    )
    return truncated.normalize()


@log_method_call()
def truncated_state(
    n: int,
    j: int,
    model: ChainModel = ChainModel.motzkin,
    t: Any = None,
    window: TruncationWindow = TruncationWindow.small_t,
    mode: Any = None,
    limits: Optional[RuntimeLimits] = None,
) -> GroundState:
    """
    Normalized ground state restricted to the window's walks, original weights.

    :raises ModelMismatchError: for anything but the Motzkin chain
    """
    return _restrict(_exact_motzkin(n, j, model, t, mode, limits), window)


@log_method_call()
def truncation_fidelity(
    n: int,
    j: int,
    t: Any,
    window: TruncationWindow,
    mode: Any = None,
    limits: Optional[RuntimeLimits] = None,
) -> Union[Fraction, float]:
    """Fidelity of the window's approximant with the exact Motzkin ground state."""
    exact = _exact_motzkin(n, j, ChainModel.motzkin, t, mode, limits)
    return fidelity(_restrict(exact, window), exact)
