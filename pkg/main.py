import logging
import os
import sys

from dotenv import load_dotenv

from cli.commands import run_cli


def main():
    load_dotenv()
    logging.basicConfig(
        stream=sys.stderr,
        level=os.getenv("TREEALG_LOG_LEVEL", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
