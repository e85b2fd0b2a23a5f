from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource


class RankkitSettings(BaseSettings):
    """
    Runtime limits for rankkit.

    Only explicit keyword arguments are read; the environment and dotenv files
    are not consulted. The CLI passes its flags in as overrides.
    """

    exhaustive_max_sets: int = Field(default=24, ge=1)
    oracle_max_dimension: int = Field(default=8, ge=0)
    log_level: str = "WARNING"

    model_config = {
        "extra": "ignore",
        "frozen": True,
    }

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


def get_settings(**overrides: object) -> RankkitSettings:
    explicit = {k: v for k, v in overrides.items() if v is not None}
    return RankkitSettings(**explicit)  # type: ignore[arg-type]
