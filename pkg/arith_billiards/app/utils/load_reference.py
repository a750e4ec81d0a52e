import json
import logging
from pathlib import Path
from typing import Optional

from app.schemas.sequence import SeqSpec

logger = logging.getLogger("arith_billiards")

REFERENCE_PATH = Path(__file__).resolve().parents[2] / "data" / "factored_numerators.json"


def load_factored_numerator(spec: SeqSpec, file_path: Path = REFERENCE_PATH) -> Optional[str]:
    """
    Look up the published factored numerator for a circular sequence.

    Args:
        spec (SeqSpec): The sequence to look for (sign, first term, height).
        file_path (Path): Path to the JSON reference file.

    Returns:
        Optional[str]: The factored form as a sympy expression in x, or None
        when the reference file has no entry for this sequence.
    """
    with open(file_path, "r", encoding="utf-8") as f:
        reference = json.load(f)

    for obj in reference.get("numerators", []):
        if obj["sign"] == spec.sign.value and obj["t"] == spec.t and obj["m"] == spec.m:
            return obj["factored"]

    logger.debug(f"No reference numerator for {spec.sign.value}(t={spec.t}, m={spec.m}) in {file_path}")
    return None
