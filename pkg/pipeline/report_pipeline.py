import logging
import os
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from automata.language_pair import LanguagePair
from cli.oracles import random_regular_tree
from pipeline.pipeline import run_pipeline
from plots.composition_matrix import plot_composition_matrix
from syntactic.algebra import syntactic_algebra
from syntactic.algebra_analyser import add_classes_df, add_probes_df, add_table_df
from writer.csv import write_to_csv
from writer.excel import write_to_excel

logger = logging.getLogger(__name__)


def run_report_pipeline(
    language: LanguagePair,
    max_arity: int,
    output_dir: Optional[str] = None,
    seed: int = 0,
    probes: int = 20,
) -> List[str]:
    """
    Compute the syntactic algebra of the language and write its classes,
    composition table and a membership cross-check on random trees to
    `output_dir` as one workbook, one CSV per table and one heatmap per
    binary symbol. Returns the written files.
    """
    OUTPUT_DIR = output_dir or os.getenv("OUTPUT_DIR")
    if not OUTPUT_DIR:
        raise ValueError(".env misses OUTPUT_DIR")
    os.makedirs(OUTPUT_DIR, exist_ok=True)

    algebra = syntactic_algebra(language, max_arity)
    rng = np.random.default_rng(seed)
    probe_trees = [random_regular_tree(rng, language.alphabet, 6) for _ in range(probes)]
    binary = [name for name, arity in language.alphabet if arity == 2]

    pipeline_steps: List[Callable[[Dict[str, pd.DataFrame]], None]] = [
        add_classes_df(algebra),
        add_table_df(algebra),
        add_probes_df(algebra, probe_trees),
        *[plot_composition_matrix("table", name, OUTPUT_DIR) for name in binary],
        write_to_excel(os.path.join(OUTPUT_DIR, "report.xlsx")),
        write_to_csv(OUTPUT_DIR),
    ]
    data = run_pipeline(pipeline_steps)

    written = [os.path.join(OUTPUT_DIR, "report.xlsx")]
    written += [os.path.join(OUTPUT_DIR, f"{name}.csv") for name in data]
    written += [
        path
        for path in (os.path.join(OUTPUT_DIR, f"composition_matrix_{name}.png") for name in binary)
        if os.path.exists(path)
    ]
    logger.info("Report for arity <= %d written to %s", max_arity, OUTPUT_DIR)
    return written
