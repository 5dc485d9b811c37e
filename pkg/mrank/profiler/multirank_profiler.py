import argparse
import logging
import sys

from ..models.enums import OutputFormat
from ..models.rank_policy import RankPolicy
from ..models.run_config import RunConfig
from ..tools import (
    classify_tools,
    config_tools,
    profile_tools,
    report_tools,
    state_parser,
)
from ..util.errors import (
    LevelOutOfRangeError,
    MultirankError,
    ParametricEntryError,
    PrimeError,
    ZeroStateError,
)

PROGRAM_NAME = "MultirankProfiler"
PROGRAM_VERSION = "1.0"

EXIT_OK = 0
EXIT_UNREADABLE = 1
EXIT_PARSE_ERROR = 2
EXIT_ZERO_STATE = 3
EXIT_POLICY_MISMATCH = 4


def main():
    args = parse_profiler_arguments()
    try:
        config = build_run_config(args)
    except ValueError as e:
        logging.error(f"invalid arguments: {e}")
        sys.exit(EXIT_PARSE_ERROR)
    sys.exit(run(config))


# parse script command line arguments
def parse_profiler_arguments() -> argparse.Namespace:
    """Parse command line arguments for the multirank profiler

    Returns:
        argparse.Namespace: stateFile, levels, rank, seed, format, dedupe,
            dump_matrices and workers
    """
    parser = argparse.ArgumentParser(
        description="Compute the multirank profile of an n-partite qudit state"
    )
    parser.add_argument(
        "--version", action="version", version=f"{PROGRAM_NAME} {PROGRAM_VERSION}"
    )
    parser.add_argument("stateFile", help="state file path")
    parser.add_argument(
        "--levels", default="all", help="'all' or a single level ell (default: all)"
    )
    parser.add_argument(
        "--rank",
        default="fast",
        help="rank policy: exact, fast, mod:<p> or generic:<trials>,<p> (default: fast)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"master seed (default: $MRANK_SEED or {config_tools.DEFAULT_SEED})",
    )
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="report format (default: text)",
    )
    parser.add_argument(
        "--dedupe",
        action="store_true",
        help="report one bipartition per complementary pair at ell = n/2",
    )
    parser.add_argument(
        "--dump-matrices",
        action="store_true",
        help="print every flattening as dense rows",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="threads evaluating bipartitions (default: $MRANK_WORKERS or 1)",
    )

    return parser.parse_args()


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """Turn parsed arguments into a validated RunConfig, filling defaults from the environment."""
    seed = args.seed if args.seed is not None else config_tools.get_seed()
    levels = args.levels.strip().lower()
    return RunConfig(
        input_path=args.stateFile,
        level=None if levels == "all" else int(levels),
        policy=RankPolicy.from_string(
            args.rank, seed=seed, default_trials=config_tools.get_generic_trials()
        ),
        output_format=OutputFormat(args.format),
        dedupe=args.dedupe,
        dump_matrices=args.dump_matrices,
        workers=args.workers if args.workers is not None else config_tools.get_workers(),
    )


def run(config: RunConfig) -> int:
    """Profile the state file named by `config` and print the report.

    Returns:
        int: 0 on success, 1 unreadable input, 2 parse error or invalid UTF-8,
            3 zero state, 4 rank policy unable to handle the state
    """
    try:
        with open(config.input_path, "r", encoding="utf-8") as f:
            text = f.read()
    except UnicodeDecodeError as e:
        logging.error(f"{config.input_path} is not valid UTF-8: {e}")
        return EXIT_PARSE_ERROR
    except OSError as e:
        logging.error(f"cannot read {config.input_path}: {e}")
        return EXIT_UNREADABLE

    try:
        state = state_parser.parse_state(text)
    except ZeroStateError as e:
        logging.error(f"{config.input_path}: {e}")
        return EXIT_ZERO_STATE
    except MultirankError as e:
        logging.error(f"{config.input_path}: {e}")
        return EXIT_PARSE_ERROR

    try:
        profile = profile_tools.multirank_profile(
            state,
            config.policy,
            workers=config.workers,
            levels=None if config.level is None else [config.level],
        )
    except (ParametricEntryError, PrimeError) as e:
        logging.error(f"{config.input_path}: {e}")
        return EXIT_POLICY_MISMATCH
    except LevelOutOfRangeError as e:
        logging.error(f"{config.input_path}: {e}")
        return EXIT_PARSE_ERROR

    verdict = classify_tools.verdict(profile) if profile.is_complete else None
    if config.output_format == OutputFormat.JSON:
        output = report_tools.format_structured_report(
            state, profile, verdict, config.dedupe, config.dump_matrices
        )
    else:
        output = report_tools.format_text_report(
            state, profile, verdict, config.dedupe, config.dump_matrices
        )
    print(output)
    return EXIT_OK


if __name__ == "__main__":
    main()
