import json

import pytest

from infrastructure.localization import LOCALES_PATH, LocalizationManager, i18n


@pytest.fixture
def catalogs(tmp_path):
    (tmp_path / "en.json").write_text(json.dumps({"greeting": "Hello {name}", "only_en": "English"}), encoding="utf-8")
    (tmp_path / "uk.json").write_text(json.dumps({"greeting": "Привіт {name}"}), encoding="utf-8")
    return tmp_path


def _catalog(lang_code: str) -> dict:
    with open(f"{LOCALES_PATH}/{lang_code}.json", encoding="utf-8") as f:
        return json.load(f)


@pytest.mark.parametrize("lang_code", ["uk", "ru"])
def test_shipped_catalogs_have_the_same_keys(lang_code):
    assert set(_catalog(lang_code)) == set(_catalog("en"))


def test_shipped_languages():
    assert i18n.get_available_languages() == ["en", "ru", "uk"]


def test_available_languages(catalogs):
    assert LocalizationManager(str(catalogs)).get_available_languages() == ["en", "uk"]


def test_formatting_and_fallback(catalogs):
    manager = LocalizationManager(str(catalogs))
    assert manager.load_language("uk")
    assert manager.get("greeting", name="Світ") == "Привіт Світ"
    assert manager.get("only_en") == "English"
    assert manager.get("no_such_key") == "no_such_key"


def test_unknown_language_keeps_english(catalogs):
    manager = LocalizationManager(str(catalogs))
    assert not manager.load_language("xx")
    assert manager.current_language == "en"
    assert manager.get("greeting", name="World") == "Hello World"


def test_missing_placeholder_returns_template(catalogs):
    manager = LocalizationManager(str(catalogs))
    assert manager.get("greeting", other=1) == "Hello {name}"


def test_use_directory(catalogs, tmp_path_factory):
    manager = LocalizationManager(str(tmp_path_factory.mktemp("empty")))
    assert manager.get("greeting") == "greeting"
    assert manager.use_directory(str(catalogs)) is True
    assert manager.get("greeting", name="World") == "Hello World"


def test_global_catalog_is_english_by_default():
    assert i18n.current_language == "en"
    assert i18n.get("parse_undefined_symbol", name="X") == "undefined symbol X"
