from typing import Union

from pydantic import BaseModel, Field


class StateDocumentTerm(BaseModel):
    """One term of the structured state format."""

    coeff: Union[str, int] = Field(
        default="1",
        description="Coefficient in the same syntax as the text format, e.g. '-1/2+i' or 'a'.",
    )
    ket: Union[list[int], str] = Field(
        description="Basis ket as a list of 0-based indices or as a ket string ('001' or '0,12,3').",
    )


class StateDocument(BaseModel):
    """
    Structured alternative to the line-oriented state format:
    {"dims": [2, 2, 2], "terms": [{"coeff": "1", "ket": [0, 0, 1]}, ...]}
    """

    dims: list[int] = Field(description="Local dimension of each party.")
    terms: list[StateDocumentTerm] = Field(
        default_factory=list, description="Nonzero terms of the state."
    )
