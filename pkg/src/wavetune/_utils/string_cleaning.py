def clean_and_lowercase(string: str) -> str:
    string = remove_whitespace_and_separators(string)
    return string.lower()


def remove_whitespace_and_separators(string: str) -> str:
    string = "".join(string.split())
    string = string.replace("-", "")
    string = string.replace("_", "")
    return string
