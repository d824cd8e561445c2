package demo;

// exercises App
public class AppTest {
    public void testRun() {
        App app = new App();
        int got = app.run(4);
        assert got == 3;
    }
}
