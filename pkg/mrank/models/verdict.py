from dataclasses import dataclass

from .bipartition import Bipartition


@dataclass(frozen=True)
class EntanglementVerdict:
    """Entanglement classification read off a complete profile.

    `product_cuts` lists the level entries of rank 1; at ell = n/2 only the
    representative containing party 1 is listed. `generic` marks verdicts
    obtained from generic ranks, which hold outside a measure-zero set of
    parameter values.
    """

    gme: bool
    fully_product: bool
    product_cuts: tuple[Bipartition, ...] = ()
    generic: bool = False

    def __post_init__(self):
        if self.gme and (self.product_cuts or self.fully_product):
            raise ValueError("a GME verdict has no product cuts and is not fully product")
        if not self.gme and not self.product_cuts:
            raise ValueError("a state that is not GME has at least one product cut")

    def describe(self) -> str:
        if self.gme:
            return "GME"
        if self.fully_product:
            return "fully product"
        cuts = ", ".join(cut.label for cut in self.product_cuts)
        return f"decomposable across {cuts}"
