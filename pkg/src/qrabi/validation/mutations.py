"""
Deliberate corruptions used to prove the suite detects broken constants.

Each mutation patches one module attribute for the duration of a run and
names the check it is expected to break.
"""

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Dict, Iterator
from unittest.mock import patch

from qrabi.exact import ed_eigensystem
from qrabi.logging import logger
from qrabi.model import ModelParams
from qrabi.special import fcoeff


def _inflated_closed_form(params: ModelParams) -> float:
    return 1.5 * params.g / (params.omega + params.Omega)


def clear_caches() -> None:
    fcoeff._cached_table.cache_clear()
    ed_eigensystem.cache_clear()


@dataclass(frozen=True)
class Mutation:
    name: str
    target: str
    replacement: Any
    breaks: str

    @contextmanager
    def apply(self) -> Iterator[None]:
        logger.warning(f"Mutation '{self.name}': patching {self.target}")
        clear_caches()
        try:
            with patch(self.target, self.replacement):
                yield
        finally:
            clear_caches()


MUTATIONS: Dict[str, Mutation] = {
    mutation.name: mutation
    for mutation in (
        Mutation(
            name="closed-form-lambda",
            target="qrabi.vgrwa.displacement.closed_form_lambda",
            replacement=_inflated_closed_form,
            breaks="LAMBDA-ORDER",
        ),
        Mutation(
            name="grwa-diagonal",
            target="qrabi.vgrwa.blocks.NU_PLUS_SIGN",
            replacement=1.0,
            breaks="BLOCK-ORACLE",
        ),
    )
}
