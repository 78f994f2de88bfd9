import logging
from typing import Callable, Dict, List

import pandas as pd

logger = logging.getLogger(__name__)


def run_pipeline(steps: List[Callable], data: Dict[str, pd.DataFrame] | None = None) -> Dict[str, pd.DataFrame]:
    data = {} if data is None else data

    for step in steps:
        logger.info(step.__name__)
        step(data)
    return data
