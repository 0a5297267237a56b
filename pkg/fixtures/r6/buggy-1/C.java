public class C {
    private String foo;

    public void setFoo(String value) {
        this.foo = value;
    }
}
