import logging
import os

import pandas as pd

logger = logging.getLogger(__name__)


def _cell(value):
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(item) for item in value) + "]"
    return value


def write_to_csv(folder_path: str):
    """
    Write every report frame to `<folder_path>/<name>.csv`.
    List-valued cells are written as `[a, b]`.
    """

    def write_to_csv(data: dict[str, pd.DataFrame]):
        os.makedirs(folder_path, exist_ok=True)

        for sheet_name, df in data.items():
            file_path = os.path.join(folder_path, f"{sheet_name}.csv")
            df.apply(lambda column: column.map(_cell)).to_csv(
                file_path,
                index=False,
                encoding="utf-8-sig",
            )
            logger.info("Wrote %d rows to %s", len(df), file_path)

    return write_to_csv
