public class Greeter {
    private String greeting = "hello";

    public String greet(String name) {
        return greeting + ", " + name;
    }

    public void setGreeting(String greeting) {
        this.greeting = greeting;
    }
}
