"""
Тесты для модуля конфигурации.
"""

import pytest
from loguru import logger
from pydantic import ValidationError

from clique_powers.config import Settings, setup_logging


class TestSettings:
    """Тесты для класса Settings."""

    def test_default_settings(self):
        """Тест значений по умолчанию."""
        settings = Settings(_env_file=None)

        assert settings.face_limit == 10_000_000
        assert settings.exact_face_limit == 200_000
        assert settings.exact_table_max_n == 20
        assert settings.induced_search_cap == 8
        assert settings.torsion_primes == [2, 3, 5]
        assert settings.max_concurrent == 1
        assert settings.results_dir == "results"
        assert settings.logs_dir is None
        assert settings.log_level == "WARNING"

    def test_log_format_configuration(self):
        """Тест конфигурации формата логов."""
        log_format = Settings(_env_file=None).log_format
        for placeholder in ("{time", "{level", "{name", "{function", "{line", "{message"):
            assert placeholder in log_format

    def test_environment_override(self, monkeypatch):
        """Переменные окружения с префиксом CLIQUE_POWERS_."""
        monkeypatch.setenv("CLIQUE_POWERS_FACE_LIMIT", "5000")
        monkeypatch.setenv("CLIQUE_POWERS_EXACT_TABLE_MAX_N", "12")
        monkeypatch.setenv("CLIQUE_POWERS_TORSION_PRIMES", "[2, 7]")
        settings = Settings(_env_file=None)

        assert settings.face_limit == 5000
        assert settings.exact_table_max_n == 12
        assert settings.torsion_primes == [2, 7]

    @pytest.mark.parametrize(
        "field, value",
        [("face_limit", 0), ("exact_face_limit", -1), ("exact_table_max_n", 2), ("max_concurrent", 0)],
    )
    def test_invalid_values(self, field, value):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **{field: value})


class TestLogging:
    """Тесты настройки loguru."""

    def test_log_file(self, tmp_path):
        settings = Settings(_env_file=None, logs_dir=str(tmp_path / "logs"))
        setup_logging("INFO", settings)
        logger.bind().info("written to the log file")
        logger.remove()

        log_file = tmp_path / "logs" / "clique_powers.log"
        assert log_file.exists()
        assert "written to the log file" in log_file.read_text(encoding="utf-8")

    def test_level_from_settings(self, capsys):
        setup_logging(config=Settings(_env_file=None, log_level="error"))
        logger.warning("quiet")
        logger.error("loud")
        logger.remove()

        captured = capsys.readouterr().err
        assert "loud" in captured
        assert "quiet" not in captured
