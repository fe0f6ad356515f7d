import sys
import warnings
from pathlib import Path
from typing import Sequence

from colorama import Fore
from dacite import DaciteError
from hydra import compose, initialize_config_dir
from hydra.errors import HydraException
from jaxtyping import install_import_hook
from omegaconf import DictConfig
from omegaconf.errors import OmegaConfBaseException

# Configure beartype and jaxtyping.
with install_import_hook(
    ("src",),
    ("beartype", "beartype"),
):
    from src.command import get_command
    from src.command.output import write_output
    from src.config import check_input_paths, load_typed_root_config
    from src.global_cfg import set_cfg
    from src.misc.benchmarker import Benchmarker
    from src.misc.errors import PaaError, ResourceGuardError, UsageError, error_category
    from src.textmodel import get_text_model

CONFIG_DIR = Path(__file__).resolve().parents[1] / "config"

EXIT_SUCCESS = 0
EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE_GUARD = 4


def cyan(text: str) -> str:
    return f"{Fore.CYAN}{text}{Fore.RESET}"


def yellow(text: str) -> str:
    return f"{Fore.YELLOW}{text}{Fore.RESET}"


def run(cfg_dict: DictConfig) -> None:
    cfg = load_typed_root_config(cfg_dict)
    set_cfg(cfg_dict)
    check_input_paths(cfg.command)
    check_input_paths(cfg.text_model)

    benchmarker = Benchmarker()
    command = get_command(cfg.command)
    model = None
    if command.needs_text_model:
        with benchmarker.time("text_model"):
            model = get_text_model(cfg.text_model)
    if not cfg.quiet:
        print(cyan(f"Running {command.name}."), file=sys.stderr)
    output = command.run(model, benchmarker, cfg.quiet)

    metadata = {"command": command.name}
    if model is not None:
        metadata["text_model"] = cfg.text_model.name
    metadata |= output.metadata
    if output.distribution.tail > 0 and not cfg.quiet:
        print(
            yellow(f"Mass {output.distribution.tail:.3e} lies beyond the reported values."),
            file=sys.stderr,
        )

    if cfg.output is None:
        write_output(output, metadata, cfg.format, sys.stdout)
    else:
        cfg.output.parent.mkdir(exist_ok=True, parents=True)
        with cfg.output.open("w") as f:
            write_output(output, metadata, cfg.format, f)
        if not cfg.quiet:
            print(cyan(f"Saved the distribution to {cfg.output}."), file=sys.stderr)

    if cfg.benchmark_path is not None:
        benchmarker.dump(cfg.benchmark_path)
        if not cfg.quiet:
            benchmarker.summarize()


def compose_config(argv: Sequence[str]) -> DictConfig:
    with initialize_config_dir(version_base=None, config_dir=str(CONFIG_DIR)):
        return compose(config_name="main", overrides=list(argv))


def report_error(category: str, error: BaseException) -> None:
    print(f"paa-error[{category}]: {error}", file=sys.stderr)


def dispatch(argv: Sequence[str]) -> int:
    """Run one command given as Hydra overrides and return the exit code."""
    try:
        run(compose_config(argv))
    except (HydraException, OmegaConfBaseException, DaciteError, UsageError) as error:
        report_error("usage", error)
        return EXIT_USAGE
    except ResourceGuardError as error:
        report_error(error_category(error), error)
        return EXIT_RESOURCE_GUARD
    except PaaError as error:
        report_error(error_category(error), error)
        return EXIT_VALIDATION
    return EXIT_SUCCESS


if __name__ == "__main__":
    warnings.filterwarnings("ignore")
    sys.exit(dispatch(sys.argv[1:]))
