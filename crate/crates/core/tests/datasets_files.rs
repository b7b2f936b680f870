use itp_search::datasets::{load_numeric, load_text, Origin};
use itp_search::keycodec::encode_base27;
use itp_search::Error;
use std::io::Write;
use tempfile::NamedTempFile;

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn numbers_are_sorted() {
    let f = file("3\n1\n2\n");
    let d = load_numeric(f.path(), None, true).unwrap();
    assert_eq!(d.list.values(), &[1.0, 2.0, 3.0]);
    assert_eq!(d.origin, Origin::File(f.path().to_path_buf()));
}

#[test]
fn duplicates_merge_unless_kept() {
    let f = file("2\n1\n2\n\n2.0\n");
    let d = load_numeric(f.path(), None, true).unwrap();
    assert_eq!((d.list.values(), d.dedup_count), (&[1.0, 2.0][..], 2));
    let d = load_numeric(f.path(), None, false).unwrap();
    assert_eq!(d.list.values(), &[1.0, 2.0, 2.0, 2.0]);
}

#[test]
fn csv_column() {
    let f = file("x,10.5,a\ny,-2,b\nz,3e2,c\n");
    let d = load_numeric(f.path(), Some(2), true).unwrap();
    assert_eq!(d.list.values(), &[-2.0, 10.5, 300.0]);
    assert!(load_numeric(f.path(), Some(4), true).is_err());
    assert!(load_numeric(f.path(), Some(0), true).is_err());
}

#[test]
fn parse_errors_name_the_line() {
    let f = file("1\n2\nthree\n");
    match load_numeric(f.path(), None, true) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
        other => panic!("expected a parse error, got {other:?}"),
    }
    let f = file("1\nNaN\n");
    assert!(matches!(load_numeric(f.path(), None, true), Err(Error::Parse { line: 2, .. })));
}

#[test]
fn empty_inputs_fail() {
    assert!(matches!(load_numeric(file("\n\n").path(), None, true), Err(Error::Empty(_))));
    assert!(matches!(load_text(file("").path()), Err(Error::Empty(_))));
    assert!(load_numeric("/nonexistent/keys.txt", None, true).is_err());
}

#[test]
fn single_value_is_too_short() {
    assert!(matches!(load_numeric(file("4\n").path(), None, true), Err(Error::ListTooShort(_))));
}

#[test]
fn text_keys_are_encoded_and_sorted() {
    let d = load_text(file("b\na\n").path()).unwrap();
    assert_eq!(d.list.values(), &[encode_base27("a"), encode_base27("b")]);
    let d = load_text(file("Smith\nsmith\njones\n").path()).unwrap();
    assert_eq!((d.list.values().len(), d.dedup_count), (2, 1));
}
