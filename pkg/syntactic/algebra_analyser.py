import logging
from typing import Sequence

import pandas as pd

from automata.membership import membership
from syntactic.algebra import SyntacticAlgebra, classify
from terms.regular_tree import RegularTree, reachable, unravel

logger = logging.getLogger(__name__)


def add_classes_df(algebra: SyntacticAlgebra):
    """
    One row per congruence class: arity, id, number of reachable elements in it,
    acceptance (at the language arity) and a depth-3 unravelling of its representative.
    """

    def add_classes_df(data: dict[str, pd.DataFrame]) -> None:
        rows = []
        for arity, classes in sorted(algebra.classes.items()):
            for algebra_class in classes:
                witness = algebra_class.representative.witness
                rows.append(
                    {
                        "arity": arity,
                        "class_id": algebra_class.id,
                        "elements": len(algebra_class.members),
                        "accepting": algebra_class.accepting,
                        "witness_nodes": len(reachable(witness)),
                        "witness": repr(unravel(witness, 3).root),
                    }
                )
        data["classes"] = pd.DataFrame(
            rows, columns=["arity", "class_id", "elements", "accepting", "witness_nodes", "witness"]
        )

    return add_classes_df


def add_table_df(algebra: SyntacticAlgebra):
    def add_table_df(data: dict[str, pd.DataFrame]) -> None:
        data["table"] = pd.DataFrame(
            [
                {"root": entry.root, "args": list(entry.args), "result": entry.result}
                for entry in algebra.table
            ],
            columns=["root", "args", "result"],
        )

    return add_table_df


def add_probes_df(algebra: SyntacticAlgebra, probes: Sequence[RegularTree]):
    """Membership of each probe tree next to the verdict read off its class."""

    def add_probes_df(data: dict[str, pd.DataFrame]) -> None:
        rows = []
        for index, probe in enumerate(probes):
            member = membership(algebra.language.positive, probe)
            algebra_class = classify(algebra, probe)
            recognized = bool(algebra_class.accepting)
            rows.append(
                {
                    "probe": index,
                    "nodes": len(reachable(probe)),
                    "class_id": algebra_class.id,
                    "membership": member,
                    "recognizes": recognized,
                    "agree": recognized == member,
                }
            )
        data["probes"] = pd.DataFrame(
            rows, columns=["probe", "nodes", "class_id", "membership", "recognizes", "agree"]
        )
        disagreements = len(data["probes"]) - int(data["probes"]["agree"].sum()) if rows else 0
        if disagreements:
            logger.warning("%d probes disagree with membership", disagreements)

    return add_probes_df
