public class Main {
    public static void main(String[] args) {
        System.out.println(Main.class.getName());
    }
}

abstract class Base {
    protected abstract void apply();
}
