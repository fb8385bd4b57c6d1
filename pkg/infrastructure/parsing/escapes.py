"""Quoting rules shared by the parser and the printer"""

_LITERAL_ESCAPES = {"'": "'", "\\": "\\"}
_STRING_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


def _unescape(body: str, table: dict[str, str]) -> str:
    result: list[str] = []
    index = 0
    while index < len(body):
        char = body[index]
        if char == "\\" and index + 1 < len(body):
            follower = body[index + 1]
            # unknown escapes stay as written
            result.append(table.get(follower, "\\" + follower))
            index += 2
            continue
        result.append(char)
        index += 1
    return "".join(result)


def unescape_literal(token: str) -> str:
    """`'a\\'b'` -> `a'b`"""
    return _unescape(token[1:-1], _LITERAL_ESCAPES)


def unescape_string(token: str) -> str:
    return _unescape(token[1:-1], _STRING_ESCAPES)


def quote_literal(text: str) -> str:
    return "'" + text.replace("\\", "\\\\").replace("'", "\\'") + "'"


def quote_string(text: str) -> str:
    escaped = (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\t", "\\t")
    )
    return f'"{escaped}"'
