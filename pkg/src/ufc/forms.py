import typing
from dataclasses import dataclass

from django import forms
from django.utils.translation import gettext_lazy as _

from . import conf

COMMANDS = ("check", "norm", "trace", "axioms")
NAME_RE = r"^[A-Za-z_][A-Za-z0-9_']*$"


class ListField(forms.Field):
    default_error_messages = {
        "invalid_list": _("Enter a list of values."),
    }

    def __init__(self, base_field: forms.Field, **kwargs: typing.Any) -> None:
        self.base_field = base_field
        super().__init__(**kwargs)

    def to_python(self, value: typing.Any) -> list:
        if not value:
            return []
        if not isinstance(value, (list, tuple)):
            raise forms.ValidationError(
                self.error_messages["invalid_list"], code="invalid_list"
            )
        return [self.base_field.to_python(val) for val in value]

    def validate(self, value: list) -> None:
        if self.required and not value:
            raise forms.ValidationError(
                self.error_messages["required"], code="required"
            )
        for val in value:
            self.base_field.validate(val)


@dataclass(frozen=True)
class CliConfig:
    command: str
    files: typing.Tuple[str, ...]
    def_name: typing.Optional[str] = None
    max_level: int = conf.DEFAULT_MAX_LEVEL
    fuel: int = conf.DEFAULT_FUEL
    color: bool = True


class CliConfigForm(forms.Form):
    command = forms.ChoiceField(choices=[(c, c) for c in COMMANDS])
    files = ListField(forms.CharField())
    def_name = forms.RegexField(NAME_RE, required=False)
    max_level = forms.IntegerField(min_value=0, max_value=9, required=False)
    fuel = forms.IntegerField(min_value=1, required=False)
    color = forms.BooleanField(required=False)

    def clean_max_level(self) -> int:
        value = self.cleaned_data["max_level"]
        return conf.DEFAULT_MAX_LEVEL if value is None else value

    def clean_fuel(self) -> int:
        value = self.cleaned_data["fuel"]
        return conf.DEFAULT_FUEL if value is None else value

    def clean(self) -> typing.Dict[str, typing.Any]:
        cleaned_data = super().clean()
        command = cleaned_data.get("command")
        if command and command != "check" and not cleaned_data.get("def_name"):
            self.add_error("def_name", f"--def is required for {command}.")
        return cleaned_data

    def to_config(self) -> CliConfig:
        data = self.cleaned_data
        return CliConfig(
            command=data["command"],
            files=tuple(data["files"]),
            def_name=data["def_name"] or None,
            max_level=data["max_level"],
            fuel=data["fuel"],
            color=data["color"],
        )


def dict_to_text(data: dict, indent_level: int = 0) -> str:
    """Render a (nested) form error dict as an indented bullet list."""
    pad = "  " * indent_level
    lines = []
    for name, errors in data.items():
        if not errors:
            continue
        lines.append(f"{pad}* {name}")
        if isinstance(errors, dict):
            lines.append(dict_to_text(errors, indent_level + 1))
        else:
            lines.extend(f"{pad}  * {error}" for error in errors)
    return "\n".join(lines)
