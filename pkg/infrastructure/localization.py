import json
import os
import sys
from typing import Dict, List


class LocalizationManager:
    """
    Message catalog for diagnostics and command-line output.
    Loads `<lang>.json` files from the locales folder; keys missing from the
    active language fall back to English, then to the key itself.
    """

    FALLBACK_LANGUAGE = "en"

    def __init__(self, locales_dir: str, default_lang: str = "en"):
        self.locales_dir = locales_dir
        self._current_lang = default_lang
        self.translations: Dict[str, str] = {}
        self.fallback: Dict[str, str] = self._read_catalog(self.FALLBACK_LANGUAGE)
        self.load_language(default_lang)

    @property
    def current_language(self) -> str:
        """Returns current language code."""
        return self._current_lang

    def get_available_languages(self) -> List[str]:
        """Scans locales folder and returns list of available language codes."""
        if not os.path.isdir(self.locales_dir):
            return []
        return sorted(name[:-5] for name in os.listdir(self.locales_dir) if name.endswith(".json"))

    def _read_catalog(self, lang_code: str) -> Dict[str, str]:
        lang_file = os.path.join(self.locales_dir, f"{lang_code}.json")
        try:
            with open(lang_file, "r", encoding="utf-8") as f:
                return json.load(f)
        except (OSError, json.JSONDecodeError):
            return {}

    def use_directory(self, locales_dir: str) -> bool:
        """Reads catalogs from another folder, keeping the active language if it exists there."""
        self.locales_dir = locales_dir
        self.fallback = self._read_catalog(self.FALLBACK_LANGUAGE)
        return self.load_language(self._current_lang)

    def load_language(self, lang_code: str) -> bool:
        """Switches the active catalog; unknown languages keep English."""
        if lang_code not in self.get_available_languages():
            self.translations = dict(self.fallback)
            self._current_lang = self.FALLBACK_LANGUAGE
            return False
        self.translations = self._read_catalog(lang_code)
        self._current_lang = lang_code
        return True

    def get(self, key: str, **kwargs) -> str:
        """Gets translated string by key with formatting support."""
        text = self.translations.get(key) or self.fallback.get(key, key)
        if kwargs:
            try:
                return text.format(**kwargs)
            except (KeyError, ValueError, IndexError):
                return text
        return text


if getattr(sys, 'frozen', False):
    _base_dir = sys._MEIPASS
else:
    _base_dir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
LOCALES_PATH = os.path.join(_base_dir, "locales")

i18n = LocalizationManager(LOCALES_PATH, default_lang="en")

_ = i18n.get
