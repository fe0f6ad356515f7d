import json
from dataclasses import dataclass
from pathlib import Path

from dacite import Config, DaciteError, from_dict

from ..misc.errors import ValidationError
from .builders import TextModelCfg, get_text_model
from .text_model import TextModel


def text_model_from_dict(spec: dict) -> TextModel:
    """Build a model from a JSON-style spec whose "type" names the front-end."""

    # The dummy allows the union to be converted.
    @dataclass
    class Dummy:
        dummy: TextModelCfg

    fields = {("name" if key == "type" else key): value for key, value in spec.items()}
    try:
        cfg = from_dict(
            Dummy,
            {"dummy": fields},
            config=Config(type_hooks={Path: Path, float: float}),
        ).dummy
    except DaciteError as error:
        raise ValidationError(f"invalid text model spec: {error}")
    return get_text_model(cfg)


def load_text_model(path: Path) -> TextModel:
    path = Path(path)
    if not path.is_file():
        raise ValidationError(f"text model file {path} does not exist")
    with path.open() as f:
        return text_model_from_dict(json.load(f))


def text_model_to_dict(model: TextModel) -> dict:
    """The generic kernel form, which every model can be written as."""
    names = [str(context) for context in model.contexts]
    if len(set(names)) != len(names):
        raise ValidationError("context labels are not distinct as strings")
    kernel: dict[str, dict[str, dict[str, float]]] = {}
    for name, row in zip(names, model.kernel):
        entries = kernel.setdefault(name, {})
        for character, target, p in row:
            targets = entries.setdefault(model.alphabet[character], {})
            targets[names[target]] = targets.get(names[target], 0.0) + p
    return {
        "type": "kernel",
        "contexts": names,
        "start": names[model.start_context],
        "alphabet": "".join(model.alphabet),
        "kernel": kernel,
    }
