import logging
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402
import seaborn as sns  # noqa: E402

logger = logging.getLogger(__name__)


def plot_composition_matrix(dataframe_name: str, root: str, output_dir: str):
    """
    Heatmap of root(left, right) over the argument classes of a binary symbol,
    read from the composition table frame. Only arity-0 arguments are drawn.
    """

    def plot_composition_matrix(data: dict[str, pd.DataFrame]) -> None:
        df = data[dataframe_name]
        df = df[(df["root"] == root) & (df["args"].apply(len) == 2)].copy()
        df["left"] = df["args"].apply(lambda args: args[0])
        df["right"] = df["args"].apply(lambda args: args[1])
        df = df[df["left"].str.startswith("0:") & df["right"].str.startswith("0:")]

        if df.empty:
            logger.warning("No arity-0 compositions for '%s'. Skipping plot.", root)
            return

        labels = sorted(set(df["left"]) | set(df["right"]), key=lambda c: int(c.split(":")[1]))
        results = df.pivot(index="left", columns="right", values="result").reindex(index=labels, columns=labels)
        codes = results.apply(lambda column: column.map(lambda c: int(c.split(":")[1]) if isinstance(c, str) else -1))

        os.makedirs(output_dir, exist_ok=True)
        plt.figure(figsize=(6.40, 4.80), dpi=100)
        sns.heatmap(codes, annot=results.fillna(""), fmt="", cmap="Blues", cbar=False)
        plt.title(f"Composition table: {root}(left, right)")
        plt.xlabel("right argument class")
        plt.ylabel("left argument class")
        plt.tight_layout()
        file_path = os.path.join(output_dir, f"composition_matrix_{root}.png")
        plt.savefig(file_path)
        plt.close()
        logger.info("Saved %s", file_path)

    return plot_composition_matrix
