import pytest

from mchairs.words import ParseError, WordSystem, as_word, load_system, parse_system, save_system, serialize_system


def test_serialize():
    system = WordSystem(12, (as_word('1 12'), as_word('3')))

    assert serialize_system(system) == 'mc-words v1\nm=12 count=2\n1 12\n3\n'


def test_save_and_load(tmp_path, s2_system):
    path = str(tmp_path / 's2.words')

    save_system(s2_system, path)

    assert load_system(path) == s2_system


@pytest.mark.parametrize('text,line', [
    ('mc-words v2\nm=2 count=1\n1 2\n', 1),
    ('mc-words v1\nm=2\n1 2\n', 2),
    ('mc-words v1\nm=2 count=1\n1 3\n', 3),
    ('mc-words v1\nm=2 count=2\n1 2\n2 x\n', 4),
    ('mc-words v1\nm=2 count=3\n1 2\n2 1\n', 5),
    ('mc-words v1\nm=2 count=1\n1 2\n2 1\n', 4),
    ('mc-words v1\nm=2 count=1\n1 ²\n', 3),
    ('mc-words v1\nm=٢ count=1\n1\n', 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as e:
        parse_system(text)

    assert e.value.line == line


def test_parse_keeps_empty_words():
    system = parse_system('mc-words v1\nm=2 count=2\n1 2\n\n')

    assert system[1].is_empty
